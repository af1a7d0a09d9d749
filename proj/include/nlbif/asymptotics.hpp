#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nlbif/groundstate.hpp"

namespace nlbif {

/// Leading term plus first-order correction for one branch, t ≈ leading + correction.
struct AsymptoticPrediction {
    double leading = 0.0;
    double correction = 0.0;
    double leading_exponent = 0.0;     ///< power of λ in the leading term
    double correction_exponent = 0.0;  ///< power of λ in the correction

    [[nodiscard]] double predicted() const { return leading + correction; }
};

/// Large-λ predictions for both roots of g.
struct BranchAsymptotics {
    AsymptoticPrediction upper;  ///< t2 ≈ m λ^{1/e} - (b q m^{1-p}/e) λ^{(1-p)/e},  e = pq-p+1
    AsymptoticPrediction lower;  ///< t1 ≈ b^{q/(p-1)} ‖W_p‖_p λ^{-1/(p-1)} (1 + η)
    double m = 0.0;              ///< ‖W_p‖_p^{(1-p)/e}
    double k = 0.0;              ///< ((p-1) ‖W_p‖_p^{1-p} / (pq))^{1/e}, t0 ≈ k λ^{1/e}
};

/// b = 0, p > 1:  λ = 2(p+1) L_p^{2-q} M_p^q α^{pq-p+1}.
double thm11_lambda_of_alpha(double alpha, double p, double q, const GroundState& gs);

/// b = 0, p = 1:  λ = 2^q π^{2-q} α^q.
double thm11_p1_lambda_of_alpha(double alpha, double q);

/// p = 2, q = 1 exact roots (t1, t2); nullopt below λ0 = 2 √b ‖W_2‖_2.
std::optional<std::pair<double, double>> thm12_exact(double b, double lambda,
                                                     const GroundState& gs);

/// q = 1 bifurcation curves as functions of the amplitude α.
struct CurvePair {
    double lambda_lower = 0.0;  ///< b ξ^{p-1} α^{-(p-1)} (1 + b^{-1} ‖W_p‖_p^p ξ^{-p} α^p)
    double lambda_upper = 0.0;  ///< ‖W_p‖_p^p ξ^{-1} α + b ξ^{p-1} α^{1-p}
};

CurvePair thm13_curves(double alpha, double b, double p, const GroundState& gs);

BranchAsymptotics thm14_coefficients(double b, double p, double q, double lambda,
                                     const GroundState& gs);

struct RemainderSample {
    double lambda = 0.0;
    std::string branch;      ///< "upper" or "lower"
    bool skipped = false;    ///< λ at or below the fold, or no such branch (b = 0, lower)
    double t_numeric = 0.0;
    double t_predicted = 0.0;  ///< leading + first-order correction
    double measured = 0.0;     ///< t_numeric - leading
    double predicted = 0.0;    ///< first-order correction
    double ratio = 0.0;        ///< measured / predicted (1 when both vanish)
};

/// Exact roots of g written relative to their leading terms, so the remainder is
/// resolved to full relative precision even when it is 1e-10 of the root.
struct ScaledRoot {
    double leading = 0.0;
    double offset = 0.0;  ///< t = leading · (1 + offset)
};

ScaledRoot solve_upper_scaled(double b, double p, double q, double lambda, const GroundState& gs);
ScaledRoot solve_lower_scaled(double b, double p, double q, double lambda, const GroundState& gs);

/// Upper and lower samples at each λ (upper first).
std::vector<RemainderSample> measure_remainders(double b, double p, double q,
                                                std::span<const double> lambdas,
                                                const GroundState& gs);

}  // namespace nlbif
