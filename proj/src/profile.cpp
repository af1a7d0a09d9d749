#include "nlbif/profile.hpp"

#include <cmath>

#include "nlbif/error.hpp"
#include "nlbif/numerics.hpp"

namespace nlbif {

namespace {

// Below this distance from x = 1/2 the local quadratic model replaces root finding.
constexpr double kQuadraticZone = 1e-4;

// Level of W_p at x in [0, 1/2], expressed through gap = 1 - W_p(x)/ξ, which is
// computed without cancellation in every regime.
double gap_at(double x, const GroundState& gs) {
    const double p = gs.p;
    const double L = gs.L_p;
    if (x <= 0.0) return 1.0;
    const double delta = 0.5 - x;
    if (delta <= 0.0) return 0.0;
    if (delta < kQuadraticZone) {
        // -W'' = W^p at the maximum: W ≈ ξ - (ξ^p / 2)(x - 1/2)².
        return 0.5 * std::pow(gs.xi, p - 1.0) * delta * delta;
    }
    // The time map in the variable s = θ/ξ reads x = I(s) / (2 L_p).
    const double target = 2.0 * L * x;
    const double head_end = time_map_partial(p, 0.5);
    if (target <= head_end) {
        const double sigma = numerics::find_root(
            [&](double s) { return time_map_partial(p, s) - target; }, 0.0, 0.5,
            {.abs_tol = 1e-15});
        return 1.0 - sigma;
    }
    // Near the top, s = 1 - v² and the tail integral is smooth in v.
    const double tail_target = L * (1.0 - 2.0 * x);
    const double v = numerics::find_root(
        [&](double vv) { return time_map_tail(p, vv) - tail_target; }, 0.0, std::sqrt(0.5),
        {.abs_tol = 1e-16});
    return v * v;
}

}  // namespace

std::vector<double> uniform_grid(std::size_t n) {
    std::vector<double> grid(n);
    const double denom = static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) grid[i] = static_cast<double>(i) / denom;
    grid.front() = 0.0;
    grid.back() = 1.0;
    return grid;
}

double x_of_theta(double theta, const GroundState& gs) {
    if (!(theta >= 0.0 && theta <= gs.xi)) {
        throw DomainError("x_of_theta: theta must lie in [0, xi]");
    }
    const double sigma = theta / gs.xi;
    if (sigma <= 0.5) return time_map_partial(gs.p, sigma) / (2.0 * gs.L_p);
    return 0.5 - time_map_tail(gs.p, std::sqrt(1.0 - sigma)) / (2.0 * gs.L_p);
}

double eval_W(double x, const GroundState& gs) {
    if (!(x >= 0.0 && x <= 1.0)) throw DomainError("eval_W: x must lie in [0, 1]");
    if (x > 0.5) x = 1.0 - x;
    if (x == 0.0) return 0.0;
    return gs.xi * (1.0 - gap_at(x, gs));
}

double eval_W_prime(double x, const GroundState& gs) {
    if (!(x >= 0.0 && x <= 0.5)) throw DomainError("eval_W_prime: x must lie in [0, 1/2]");
    const double p = gs.p;
    const double gap = gap_at(x, gs);
    // ξ^{p+1} - W^{p+1} = ξ^{p+1} (1 - (1 - gap)^{p+1})
    const double deficit = -std::expm1((p + 1.0) * std::log1p(-gap));
    return std::sqrt(2.0 / (p + 1.0) * std::pow(gs.xi, p + 1.0) * deficit);
}

SolutionProfile sample_profile(double t, const GroundState& gs, std::size_t n,
                               std::optional<ProblemParams> params) {
    if (!(t > 0.0) || !std::isfinite(t)) throw InvalidParameter("sample_profile: t must be > 0");
    if (n < 3 || n % 2 == 0) {
        throw InvalidParameter("sample_profile: grid size must be odd and >= 3");
    }
    SolutionProfile prof;
    prof.grid = uniform_grid(n);
    prof.values.assign(n, 0.0);
    const double scale = t / gs.norm_p;
    const std::size_t mid = n / 2;
    for (std::size_t i = 1; i <= mid; ++i) {
        const double v = scale * eval_W(prof.grid[i], gs);
        prof.values[i] = v;
        prof.values[n - 1 - i] = v;
    }
    prof.params = std::move(params);
    prof.scale_t = t;
    prof.amplitude = scale * gs.xi;
    prof.source = "time-map";
    return prof;
}

}  // namespace nlbif
