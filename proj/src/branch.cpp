#include "nlbif/branch.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "nlbif/error.hpp"
#include "nlbif/numerics.hpp"

namespace nlbif {

namespace {

constexpr double kTangentTol = 1e-9;
constexpr double kCertifyTol = 1e-10;
constexpr int kMaxBracketSteps = 2000;

void check_ground_state(double p, const GroundState& gs) {
    if (gs.p != p) {
        throw InvalidParameter("ground state was built for p = " + std::to_string(gs.p) +
                               ", problem has p = " + std::to_string(p));
    }
}

// pq (t^p + b)^{q-1} t - (p-1) c ; strictly increasing in t > 0.
double reduced_derivative(double t, const ProblemParams& pr, double c) {
    return pr.p * pr.q * std::pow(std::pow(t, pr.p) + pr.b, pr.q - 1.0) * t - (pr.p - 1.0) * c;
}

}  // namespace

std::string_view to_string(RootKind kind) {
    switch (kind) {
        case RootKind::NoSolution: return "no-solution";
        case RootKind::Tangent: return "tangent";
        case RootKind::Pair: return "pair";
        case RootKind::Unique: return "unique";
    }
    return "unknown";
}

std::vector<std::pair<std::string, double>> BranchRoots::labelled() const {
    switch (kind) {
        case RootKind::Pair: return {{"lower", *t_lower}, {"upper", *t_upper}};
        case RootKind::Tangent: return {{"fold", *t_lower}};
        case RootKind::Unique: return {{"unique", *t_lower}};
        case RootKind::NoSolution: break;
    }
    return {};
}

double g_coefficient(const ProblemParams& params, const GroundState& gs) {
    return params.lambda * std::pow(gs.norm_p, 1.0 - params.p);
}

double g_eval(double t, const ProblemParams& params, const GroundState& gs) {
    if (!(t > 0.0)) throw DomainError("g_eval: t must be > 0");
    check_ground_state(params.p, gs);
    const double c = g_coefficient(params, gs);
    return std::pow(std::pow(t, params.p) + params.b, params.q) - c * std::pow(t, params.p - 1.0);
}

double find_t0(const ProblemParams& params, const GroundState& gs) {
    params.validate();
    check_ground_state(params.p, gs);
    if (params.b == 0.0) throw NotApplicable("find_t0: g has no interior minimum when b = 0");
    const double c = g_coefficient(params, gs);
    auto f = [&](double t) { return reduced_derivative(t, params, c); };

    double hi = 1.0;
    double lo = 1.0;
    int steps = 0;
    if (f(hi) <= 0.0) {
        while (f(hi) <= 0.0) {
            lo = hi;
            hi *= 2.0;
            if (++steps > kMaxBracketSteps) throw ConvergenceFailure("find_t0: no upper bracket");
        }
    } else {
        while (f(lo) > 0.0) {
            hi = lo;
            lo *= 0.5;
            if (++steps > kMaxBracketSteps) throw ConvergenceFailure("find_t0: no lower bracket");
        }
    }
    return numerics::find_root(f, lo, hi, {.abs_tol = 1e-300});
}

double g_at_t0(double t0, const ProblemParams& params, const GroundState& gs) {
    const double c = g_coefficient(params, gs);
    const double numerator =
        params.b * (params.p - 1.0) - params.growth_exponent() * std::pow(t0, params.p);
    return c / (params.p * params.q * t0) * numerator;
}

BranchRoots solve_branches(const ProblemParams& params, const GroundState& gs) {
    params.validate();
    check_ground_state(params.p, gs);
    const double c = g_coefficient(params, gs);
    BranchRoots roots;

    if (params.b == 0.0) {
        const double t = std::pow(c, 1.0 / params.growth_exponent());
        roots.kind = RootKind::Unique;
        roots.t_lower = t;
        roots.t_upper = t;
        return roots;
    }

    const double t0 = find_t0(params, gs);
    roots.t0 = t0;
    const double g0 = g_at_t0(t0, params, gs);
    if (std::abs(g0) <= kTangentTol * std::pow(params.b, params.q)) {
        roots.kind = RootKind::Tangent;
        roots.t_lower = t0;
        roots.t_upper = t0;
        return roots;
    }
    if (g0 > 0.0) {
        roots.kind = RootKind::NoSolution;
        return roots;
    }

    auto g = [&](double t) { return g_eval(t, params, gs); };

    // g(0+) = b^q > 0: shrink towards zero until g turns positive.
    double lo = 0.1 * t0;
    int steps = 0;
    while (g(lo) <= 0.0) {
        lo *= 0.1;
        if (++steps > kMaxBracketSteps || lo == 0.0) {
            throw ConvergenceFailure("solve_branches: no bracket for the lower root");
        }
    }
    // g ~ t^{pq} with pq > p - 1, so g > 0 for large t.
    double hi = 2.0 * t0;
    steps = 0;
    while (g(hi) <= 0.0) {
        hi *= 2.0;
        if (++steps > kMaxBracketSteps || !std::isfinite(hi)) {
            throw ConvergenceFailure("solve_branches: no bracket for the upper root");
        }
    }
    roots.kind = RootKind::Pair;
    roots.t_lower = numerics::find_root(g, lo, t0, {.abs_tol = 1e-300});
    roots.t_upper = numerics::find_root(g, t0, hi, {.abs_tol = 1e-300});
    return roots;
}

bool certify_root(double t, const ProblemParams& params, const GroundState& gs) {
    const double scale =
        std::max({1.0, std::pow(params.b, params.q),
                  std::pow(std::pow(t, params.p) + params.b, params.q)});
    if (std::abs(g_eval(t, params, gs)) > kCertifyTol * scale) return false;
    const double delta = 1e-8;
    const double left = g_eval(t * (1.0 - delta), params, gs);
    const double right = g_eval(t * (1.0 + delta), params, gs);
    return std::signbit(left) != std::signbit(right);
}

ThresholdResult threshold_bisection(double b, double p, double q, const GroundState& gs) {
    validate_family(b, p, q);
    check_ground_state(p, gs);
    if (b == 0.0) throw NotApplicable("threshold: solutions exist for every lambda > 0 when b = 0");

    // b(p-1) - (pq-p+1) t0(λ)^p carries the sign of g(t0(λ); λ), which decreases in λ.
    auto fold_sign = [&](double lambda) {
        const ProblemParams pr{b, p, q, lambda};
        const double t0 = find_t0(pr, gs);
        return b * (p - 1.0) - pr.growth_exponent() * std::pow(t0, p);
    };

    double lo = 1.0;
    double hi = 1.0;
    int steps = 0;
    if (fold_sign(1.0) > 0.0) {
        while (fold_sign(hi) > 0.0) {
            lo = hi;
            hi *= 2.0;
            if (++steps > kMaxBracketSteps) throw ConvergenceFailure("threshold: no bracket");
        }
    } else {
        while (fold_sign(lo) <= 0.0) {
            hi = lo;
            lo *= 0.5;
            if (++steps > kMaxBracketSteps) throw ConvergenceFailure("threshold: no bracket");
        }
    }
    // Bisection in log λ.
    for (int it = 0; it < 200 && hi / lo - 1.0 > 1e-14; ++it) {
        const double mid = std::sqrt(lo * hi);
        (fold_sign(mid) > 0.0 ? lo : hi) = mid;
    }
    if (hi / lo - 1.0 > 1e-12) throw ConvergenceFailure("threshold: bisection did not converge");

    ThresholdResult res;
    res.lambda0 = std::sqrt(lo * hi);
    res.t_at_fold = find_t0(ProblemParams{b, p, q, res.lambda0}, gs);
    res.alpha0 = res.t_at_fold * gs.xi / gs.norm_p;
    return res;
}

ThresholdResult threshold(double b, double p, double q, const GroundState& gs) {
    validate_family(b, p, q);
    check_ground_state(p, gs);
    if (b == 0.0) throw NotApplicable("threshold: solutions exist for every lambda > 0 when b = 0");
    if (q != 1.0) return threshold_bisection(b, p, q, gs);

    ThresholdResult res;
    const double base = std::pow(b * (p - 1.0), 1.0 / p);
    res.lambda0 = base * p / (p - 1.0) * std::pow(gs.norm_p, p - 1.0);
    res.t_at_fold = base;  // (p-1)/p · λ0 ‖W_p‖_p^{1-p}
    res.alpha0 = res.t_at_fold * gs.xi / gs.norm_p;
    return res;
}

std::vector<BranchPoint> sweep(double b, double p, double q, std::span<const double> lambda_grid,
                               const GroundState& gs) {
    validate_family(b, p, q);
    check_ground_state(p, gs);
    for (std::size_t i = 0; i < lambda_grid.size(); ++i) {
        if (!(lambda_grid[i] > 0.0)) throw InvalidParameter("sweep: lambda values must be > 0");
        if (i > 0 && !(lambda_grid[i] >= lambda_grid[i - 1])) {
            throw InvalidParameter("sweep: lambda grid must be sorted ascending");
        }
    }
    std::vector<BranchPoint> points;
    points.reserve(2 * lambda_grid.size());
    const double amp = gs.xi / gs.norm_p;
    for (double lambda : lambda_grid) {
        const auto roots = solve_branches(ProblemParams{b, p, q, lambda}, gs);
        for (auto& [label, t] : roots.labelled()) {
            points.push_back({lambda, t, t * amp, label});
        }
    }
    return points;
}

LinearCaseSolution solve_p1(double b, double q, double lambda, std::size_t n) {
    if (b != 0.0) throw UnsupportedCase("solve_p1: p = 1 requires b = 0");
    if (!(q > 0.0)) throw InvalidParameter("solve_p1: q must be > 0");
    if (!(lambda > 0.0)) throw InvalidParameter("solve_p1: lambda must be > 0");
    if (n < 3 || n % 2 == 0) throw InvalidParameter("solve_p1: grid size must be odd and >= 3");

    constexpr double pi = std::numbers::pi;
    LinearCaseSolution sol;
    sol.alpha = std::pow(lambda * std::pow(2.0, -q) * std::pow(pi, q - 2.0), 1.0 / q);
    auto& prof = sol.profile;
    prof.grid = uniform_grid(n);
    prof.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) prof.values[i] = sol.alpha * std::sin(pi * prof.grid[i]);
    prof.values.front() = 0.0;
    prof.values.back() = 0.0;
    prof.values[n / 2] = sol.alpha;
    prof.params = ProblemParams{0.0, 1.0, q, lambda};
    prof.scale_t = 2.0 * sol.alpha / pi;
    prof.amplitude = sol.alpha;
    prof.source = "sine";
    return sol;
}

std::vector<BranchPoint> sweep_p1(double q, std::span<const double> lambda_grid) {
    std::vector<BranchPoint> points;
    points.reserve(lambda_grid.size());
    for (double lambda : lambda_grid) {
        const auto sol = solve_p1(0.0, q, lambda, 3);
        points.push_back({lambda, sol.profile.scale_t, sol.alpha, "unique"});
    }
    return points;
}

std::vector<double> lambda_grid(double lo, double hi, std::size_t num, bool log_spacing) {
    if (num == 0) throw InvalidParameter("lambda_grid: need at least one point");
    if (!(lo > 0.0) || !(hi >= lo)) throw InvalidParameter("lambda_grid: need 0 < min <= max");
    std::vector<double> grid(num);
    if (num == 1) {
        grid[0] = lo;
        return grid;
    }
    const double denom = static_cast<double>(num - 1);
    for (std::size_t i = 0; i < num; ++i) {
        const double f = static_cast<double>(i) / denom;
        grid[i] = log_spacing ? lo * std::pow(hi / lo, f) : lo + (hi - lo) * f;
    }
    grid.back() = hi;
    return grid;
}

}  // namespace nlbif
