#pragma once

#include <string>

namespace nlbif {

/// Coefficients of  -(∫|u|^p + b)^q u'' = λ u^p,  u(0) = u(1) = 0.
struct ProblemParams {
    double b = 0.0;       ///< nonlocal offset, >= 0
    double p = 2.0;       ///< nonlinearity exponent, >= 1
    double q = 1.0;       ///< nonlocal exponent, > 1 - 1/p
    double lambda = 1.0;  ///< bifurcation parameter, > 0

    /// Throws InvalidParameter on b < 0, p < 1, q <= 1 - 1/p or λ <= 0, and
    /// UnsupportedCase on p = 1 with b > 0.
    void validate() const;

    /// pq - p + 1; positive for admissible parameters.
    [[nodiscard]] double growth_exponent() const { return p * q - p + 1.0; }
};

/// Validation of the (b, p, q) family without a λ value.
void validate_family(double b, double p, double q);

std::string to_string(const ProblemParams& params);

}  // namespace nlbif
