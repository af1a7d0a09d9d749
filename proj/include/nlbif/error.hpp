#pragma once

#include <stdexcept>
#include <string>

namespace nlbif {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A parameter violates the admissible range (b >= 0, p >= 1, q > 1 - 1/p, ...).
class InvalidParameter : public Error {
public:
    using Error::Error;
};

/// An argument lies outside the domain of a function (e.g. x outside [0,1]).
class DomainError : public Error {
public:
    using Error::Error;
};

/// The operation is meaningless for this parameter regime (e.g. t0 when b = 0).
class NotApplicable : public Error {
public:
    using Error::Error;
};

/// Admissible parameters for which no closed theory exists (p = 1 with b > 0).
class UnsupportedCase : public Error {
public:
    using Error::Error;
};

/// Iterative method failed to bracket or converge.
class ConvergenceFailure : public Error {
public:
    using Error::Error;
};

}  // namespace nlbif
