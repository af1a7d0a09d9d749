#pragma once

#include <cstddef>
#include <vector>

#include "nlbif/params.hpp"
#include "nlbif/profile.hpp"

namespace nlbif {

// Independent verification path. Nothing here uses L_p, M_p, the time map or g.

struct ResidualReport {
    double max_abs = 0.0;     ///< max over interior nodes of |(‖u‖_p^p + b)^q u''_h + λ u^p|
    double scale = 1.0;       ///< max(λ α^p, 1)
    std::size_t grid_n = 0;
    double normalized = 0.0;  ///< max_abs / scale
};

/// Positive single-bump solution of  -A u'' = λ u^p,  u(0) = u(1) = 0, by fixed-step RK4
/// shooting on the initial slope. The internal step is at most 1/2000 and the output grid
/// (odd n >= 3) is a subsampling of it. `scale_t` holds the Simpson p-norm on the fine grid.
SolutionProfile shoot_local(double A, double lambda, double p, std::size_t n);

/// Solutions of the nonlocal problem as fixed points of the diffusion coefficient:
///   F(A) = (‖u_A‖_p^p + b)^q - A,  u_A = shoot_local(A, λ, p).
/// Scans A on a 200-point log grid over [1e-6, 1e6]·(b^q + 1) and refines every sign change.
std::vector<SolutionProfile> solve_nonlocal_by_coefficient(const ProblemParams& params,
                                                           std::size_t n);

/// Central-difference residual of the full nonlocal equation on a uniform grid (n >= 5).
/// Throws InvalidParameter for non-uniform grids or profiles that are not positive inside.
ResidualReport residual_check(const SolutionProfile& profile, const ProblemParams& params);

/// ∫₀¹ |u|^p on a uniform grid: Simpson for odd n, trapezoid otherwise.
double grid_p_integral(const std::vector<double>& values, double p);

}  // namespace nlbif
