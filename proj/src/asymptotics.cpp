#include "nlbif/asymptotics.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "nlbif/branch.hpp"
#include "nlbif/error.hpp"
#include "nlbif/numerics.hpp"

namespace nlbif {

namespace {

void require_ground_state(double p, const GroundState& gs) {
    if (!(p > 1.0)) throw InvalidParameter("asymptotics: p must be > 1 (use the p = 1 formula)");
    if (gs.p != p) throw InvalidParameter("asymptotics: ground state built for a different p");
}

// Fold parameter, or 0 when every λ > 0 admits solutions.
double fold_lambda(double b, double p, double q, const GroundState& gs) {
    return b == 0.0 ? 0.0 : threshold(b, p, q, gs).lambda0;
}

}  // namespace

double thm11_lambda_of_alpha(double alpha, double p, double q, const GroundState& gs) {
    require_ground_state(p, gs);
    if (!(alpha > 0.0)) throw InvalidParameter("thm11: alpha must be > 0");
    return 2.0 * (p + 1.0) * std::pow(gs.L_p, 2.0 - q) * std::pow(gs.M_p, q) *
           std::pow(alpha, p * q - p + 1.0);
}

double thm11_p1_lambda_of_alpha(double alpha, double q) {
    if (!(alpha > 0.0)) throw InvalidParameter("thm11: alpha must be > 0");
    constexpr double pi = std::numbers::pi;
    return std::pow(2.0, q) * std::pow(pi, 2.0 - q) * std::pow(alpha, q);
}

std::optional<std::pair<double, double>> thm12_exact(double b, double lambda,
                                                     const GroundState& gs) {
    if (gs.p != 2.0) throw InvalidParameter("thm12: requires the p = 2 ground state");
    if (b < 0.0 || !(lambda > 0.0)) throw InvalidParameter("thm12: need b >= 0, lambda > 0");
    const double c = lambda / gs.norm_p;
    const double disc = c * c - 4.0 * b;
    if (disc < 0.0) return std::nullopt;
    const double upper = 0.5 * (c + std::sqrt(disc));
    // Vieta (t1 t2 = b) avoids cancellation in (c - √disc)/2.
    const double lower = upper > 0.0 ? b / upper : 0.0;
    return std::pair{lower, upper};
}

CurvePair thm13_curves(double alpha, double b, double p, const GroundState& gs) {
    require_ground_state(p, gs);
    if (!(alpha > 0.0)) throw InvalidParameter("thm13: alpha must be > 0");
    const double xi = gs.xi;
    const double normp = std::pow(gs.norm_p, p);
    CurvePair curves;
    curves.lambda_lower = b * std::pow(xi, p - 1.0) * std::pow(alpha, 1.0 - p) +
                          normp * std::pow(xi, -1.0) * alpha;
    curves.lambda_upper =
        normp / xi * alpha + b * std::pow(xi, p - 1.0) * std::pow(alpha, 1.0 - p);
    return curves;
}

BranchAsymptotics thm14_coefficients(double b, double p, double q, double lambda,
                                     const GroundState& gs) {
    require_ground_state(p, gs);
    validate_family(b, p, q);
    if (!(lambda > 0.0)) throw InvalidParameter("thm14: lambda must be > 0");
    const double e = p * q - p + 1.0;
    BranchAsymptotics out;
    out.m = std::pow(gs.norm_p, (1.0 - p) / e);
    out.k = std::pow((p - 1.0) * std::pow(gs.norm_p, 1.0 - p) / (p * q), 1.0 / e);

    out.upper.leading_exponent = 1.0 / e;
    out.upper.correction_exponent = (1.0 - p) / e;
    out.upper.leading = out.m * std::pow(lambda, 1.0 / e);
    out.upper.correction =
        -b * q * std::pow(out.m, 1.0 - p) / e * std::pow(lambda, (1.0 - p) / e);

    out.lower.leading_exponent = -1.0 / (p - 1.0);
    out.lower.correction_exponent = -(p + 1.0) / (p - 1.0);
    out.lower.leading = std::pow(b, q / (p - 1.0)) * gs.norm_p * std::pow(lambda, -1.0 / (p - 1.0));
    const double eta = q / (p - 1.0) * std::pow(b, e / (p - 1.0)) * std::pow(gs.norm_p, p) *
                       std::pow(lambda, -p / (p - 1.0));
    out.lower.correction = out.lower.leading * eta;
    return out;
}

ScaledRoot solve_upper_scaled(double b, double p, double q, double lambda, const GroundState& gs) {
    require_ground_state(p, gs);
    const double e = p * q - p + 1.0;
    ScaledRoot root;
    root.leading = std::pow(gs.norm_p, (1.0 - p) / e) * std::pow(lambda, 1.0 / e);
    if (b == 0.0) return root;  // the leading term is the exact root

    // With t = L(1 + ρ) and L^e = λ‖W_p‖_p^{1-p}, g(t) = 0 becomes
    //   q log(1 + ((1+ρ)^p - 1) + β) = (p-1) log(1+ρ),   β = b L^{-p}.
    const double beta = b * std::pow(root.leading, -p);
    auto f = [&](double rho) {
        const double lp = std::log1p(rho);
        return q * std::log1p(std::expm1(p * lp) + beta) - (p - 1.0) * lp;
    };
    // f(0) > 0; below the root f < 0 down to the critical point t0 (where g < 0).
    const double t0 = find_t0(ProblemParams{b, p, q, lambda}, gs);
    const double floor_rho = t0 / root.leading - 1.0;
    if (f(floor_rho) >= 0.0) throw ConvergenceFailure("solve_upper_scaled: no solution at lambda");
    double lo = -2.0 * q * beta / e;
    while (lo > floor_rho && f(lo) >= 0.0) lo *= 2.0;
    lo = std::max(lo, floor_rho);
    root.offset = numerics::find_root(f, lo, 0.0, {.abs_tol = 1e-300});
    return root;
}

ScaledRoot solve_lower_scaled(double b, double p, double q, double lambda, const GroundState& gs) {
    require_ground_state(p, gs);
    if (b == 0.0) throw NotApplicable("solve_lower_scaled: no lower branch when b = 0");
    ScaledRoot root;
    root.leading = std::pow(b, q / (p - 1.0)) * gs.norm_p * std::pow(lambda, -1.0 / (p - 1.0));

    // With t = T(1 + η) and λ‖W_p‖_p^{1-p} T^{p-1} = b^q, g(t) = 0 becomes
    //   q log(1 + γ(1+η)^p) = (p-1) log(1+η),   γ = T^p / b.
    const double gamma = std::pow(root.leading, p) / b;
    auto f = [&](double eta) {
        return q * std::log1p(gamma * std::pow(1.0 + eta, p)) - (p - 1.0) * std::log1p(eta);
    };
    const double t0 = find_t0(ProblemParams{b, p, q, lambda}, gs);
    const double ceil_eta = t0 / root.leading - 1.0;
    if (!(ceil_eta > 0.0) || f(ceil_eta) >= 0.0) {
        throw ConvergenceFailure("solve_lower_scaled: no solution at lambda");
    }
    double hi = 2.0 * q * gamma / (p - 1.0);
    while (hi < ceil_eta && f(hi) >= 0.0) hi *= 2.0;
    hi = std::min(hi, ceil_eta);
    root.offset = numerics::find_root(f, 0.0, hi, {.abs_tol = 1e-300});
    return root;
}

std::vector<RemainderSample> measure_remainders(double b, double p, double q,
                                                std::span<const double> lambdas,
                                                const GroundState& gs) {
    require_ground_state(p, gs);
    validate_family(b, p, q);
    const double lambda0 = fold_lambda(b, p, q, gs);
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();

    auto ratio_of = [](double measured, double predicted) {
        if (predicted == 0.0) return measured == 0.0 ? 1.0 : nan;
        return measured / predicted;
    };

    std::vector<RemainderSample> out;
    out.reserve(2 * lambdas.size());
    for (double lambda : lambdas) {
        RemainderSample up{.lambda = lambda, .branch = "upper"};
        RemainderSample low{.lambda = lambda, .branch = "lower"};
        if (!(lambda > lambda0)) {
            up.skipped = low.skipped = true;
            up.t_numeric = up.t_predicted = up.measured = up.predicted = up.ratio = nan;
            low.t_numeric = low.t_predicted = low.measured = low.predicted = low.ratio = nan;
            out.push_back(up);
            out.push_back(low);
            continue;
        }
        const auto pred = thm14_coefficients(b, p, q, lambda, gs);

        const auto upper = solve_upper_scaled(b, p, q, lambda, gs);
        up.t_numeric = upper.leading * (1.0 + upper.offset);
        up.t_predicted = pred.upper.predicted();
        up.measured = upper.leading * upper.offset;
        up.predicted = pred.upper.correction;
        up.ratio = ratio_of(up.measured, up.predicted);
        out.push_back(up);

        if (b == 0.0) {
            low.skipped = true;
            low.t_numeric = low.t_predicted = low.measured = low.predicted = low.ratio = nan;
        } else {
            const auto lower = solve_lower_scaled(b, p, q, lambda, gs);
            low.t_numeric = lower.leading * (1.0 + lower.offset);
            low.t_predicted = pred.lower.predicted();
            low.measured = lower.leading * lower.offset;
            low.predicted = pred.lower.correction;
            low.ratio = ratio_of(low.measured, low.predicted);
        }
        out.push_back(low);
    }
    return out;
}

}  // namespace nlbif
