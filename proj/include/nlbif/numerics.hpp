#pragma once

// Thin wrappers over Boost.Math quadrature and bracketed root finding,
// plus grid quadrature used for sampled profiles.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <string>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/tools/toms748_solve.hpp>

#include "nlbif/error.hpp"

namespace nlbif::numerics {

inline constexpr double kEps = std::numeric_limits<double>::epsilon();

/// Tanh-sinh (double-exponential) quadrature on [a, b]. Tolerates algebraic endpoint
/// behaviour such as s^{p+1} with non-integer p; the integrand is never evaluated at a or b.
template <class F>
double integrate(F&& f, double a, double b, double rel_tol = 1e-15, double* error = nullptr) {
    if (a == b) {
        if (error) *error = 0.0;
        return 0.0;
    }
    thread_local boost::math::quadrature::tanh_sinh<double> rule;
    double err = 0.0;
    const double value = rule.integrate(f, a, b, rel_tol, &err);
    if (error) *error = err;
    return value;
}

struct RootOptions {
    double abs_tol = 0.0;           // stop when bracket width <= max(abs_tol, rel_ulps * eps * |x|)
    double rel_ulps = 4.0;
    std::uintmax_t max_iter = 200;
};

/// Bracketed root of a continuous f on [lo, hi] (TOMS 748: safeguarded
/// inverse-cubic/secant steps with a bisection fallback). Requires a sign change.
template <class F>
double find_root(F&& f, double lo, double hi, const RootOptions& opt = {}) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (std::signbit(flo) == std::signbit(fhi) || !std::isfinite(flo) || !std::isfinite(fhi)) {
        throw ConvergenceFailure("find_root: no sign change on [" + std::to_string(lo) + ", " +
                                 std::to_string(hi) + "]");
    }
    const double scale = opt.rel_ulps * kEps;
    const double abs_tol = opt.abs_tol;
    auto tol = [scale, abs_tol](double a, double b) {
        return std::abs(a - b) <= std::max(abs_tol, scale * std::min(std::abs(a), std::abs(b)));
    };
    std::uintmax_t iters = opt.max_iter;
    const auto [a, b] = boost::math::tools::toms748_solve(f, lo, hi, flo, fhi, tol, iters);
    if (iters >= opt.max_iter && !tol(a, b)) {
        throw ConvergenceFailure("find_root: iteration cap reached");
    }
    // Return whichever end has the smaller residual.
    const double fa = f(a);
    const double fb = f(b);
    return std::abs(fa) <= std::abs(fb) ? a : b;
}

/// Composite Simpson rule on a uniform grid with an odd number of samples.
inline double simpson(std::span<const double> values, double h) {
    const std::size_t n = values.size();
    if (n < 3 || n % 2 == 0) {
        throw InvalidParameter("simpson: need an odd number (>= 3) of samples");
    }
    double odd = 0.0;
    double even = 0.0;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        (i % 2 ? odd : even) += values[i];
    }
    return h / 3.0 * (values.front() + 4.0 * odd + 2.0 * even + values.back());
}

}  // namespace nlbif::numerics
