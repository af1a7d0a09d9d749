#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nlbif/groundstate.hpp"
#include "nlbif/params.hpp"

namespace nlbif {

/// A positive solution sampled on a uniform grid over [0, 1].
struct SolutionProfile {
    std::vector<double> grid;
    std::vector<double> values;
    std::optional<ProblemParams> params;  ///< unset for purely local (shooting) problems
    double scale_t = 0.0;                 ///< ‖u‖_p, so u = t · W_p / ‖W_p‖_p
    double amplitude = 0.0;               ///< α = max u
    std::string source;                   ///< "time-map", "shooting", "sine", ...

    [[nodiscard]] std::size_t size() const { return grid.size(); }
};

/// Position x in [0, 1/2] at which W_p reaches the level θ in [0, ξ]:
///   x(θ) = √((p+1)/2) ∫₀^θ dφ / √(ξ^{p+1} - φ^{p+1}).
double x_of_theta(double theta, const GroundState& gs);

/// W_p(x) for x in [0, 1], by inverting the time map (symmetric about 1/2).
double eval_W(double x, const GroundState& gs);

/// W_p'(x) for x in [0, 1/2] from the energy identity.
double eval_W_prime(double x, const GroundState& gs);

/// u = t · W_p / ‖W_p‖_p on a uniform grid of odd size n >= 3.
SolutionProfile sample_profile(double t, const GroundState& gs, std::size_t n,
                               std::optional<ProblemParams> params = std::nullopt);

/// Uniform grid i/(n-1), i = 0..n-1, with exact endpoints.
std::vector<double> uniform_grid(std::size_t n);

}  // namespace nlbif
