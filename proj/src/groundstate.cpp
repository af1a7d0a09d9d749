#include "nlbif/groundstate.hpp"

#include <cmath>
#include <numbers>

#include "nlbif/error.hpp"
#include "nlbif/numerics.hpp"

namespace nlbif {

namespace {

void require_p_at_least_one(double p, const char* what) {
    if (!std::isfinite(p) || p < 1.0) {
        throw InvalidParameter(std::string(what) + ": p must be >= 1");
    }
}

// 1 - (1 - u²)^{p+1} without cancellation for small u.
double one_minus_pow(double p, double u) {
    return -std::expm1((p + 1.0) * std::log1p(-u * u));
}

// Integrand of the time map after s = 1 - u².
double tail_integrand(double p, double u) {
    if (u < 1e-8) return 2.0 / std::sqrt(p + 1.0);  // removable: error O(u²)
    return 2.0 * u / std::sqrt(one_minus_pow(p, u));
}

}  // namespace

double time_map_tail(double p, double v) {
    require_p_at_least_one(p, "time_map_tail");
    if (!(v >= 0.0 && v <= 1.0)) throw DomainError("time_map_tail: v must lie in [0, 1]");
    return numerics::integrate([p](double u) { return tail_integrand(p, u); }, 0.0, v);
}

double time_map_partial(double p, double sigma) {
    require_p_at_least_one(p, "time_map_partial");
    if (!(sigma >= 0.0 && sigma <= 1.0)) {
        throw DomainError("time_map_partial: sigma must lie in [0, 1]");
    }
    if (sigma <= 0.5) {
        return numerics::integrate(
            [p](double s) { return 1.0 / std::sqrt(-std::expm1((p + 1.0) * std::log(s))); }, 0.0,
            sigma);
    }
    return compute_Lp(p) - time_map_tail(p, std::sqrt(1.0 - sigma));
}

double compute_Lp(double p) {
    require_p_at_least_one(p, "compute_Lp");
    return time_map_tail(p, 1.0);
}

double compute_Lp_closed_form(double p) {
    require_p_at_least_one(p, "compute_Lp_closed_form");
    const double a = 1.0 / (p + 1.0);
    const double beta = std::exp(std::lgamma(a) + std::lgamma(0.5) - std::lgamma(a + 0.5));
    return beta / (p + 1.0);
}

double compute_Mp(double p) {
    require_p_at_least_one(p, "compute_Mp");
    return 2.0 / (p + 1.0);
}

double compute_Mp_quadrature(double p) {
    require_p_at_least_one(p, "compute_Mp_quadrature");
    return numerics::integrate(
        [p](double u) { return std::pow(1.0 - u * u, p) * tail_integrand(p, u); }, 0.0, 1.0);
}

GroundState build_ground_state(double p) {
    if (!std::isfinite(p) || !(p > 1.0)) {
        throw InvalidParameter("build_ground_state: p must be > 1 (p = 1 is handled analytically)");
    }
    GroundState gs;
    gs.p = p;
    gs.L_p = compute_Lp(p);
    gs.M_p = compute_Mp(p);
    const double base = std::pow(2.0 * (p + 1.0), 1.0 / (p - 1.0));
    gs.xi = base * std::pow(gs.L_p, 2.0 / (p - 1.0));
    gs.norm_p = base * std::pow(gs.M_p, 1.0 / p) * std::pow(gs.L_p, (p + 1.0) / (p * (p - 1.0)));
    return gs;
}

}  // namespace nlbif
