#include "nlbif/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "nlbif/error.hpp"
#include "nlbif/numerics.hpp"

namespace nlbif {

namespace {

constexpr std::size_t kMinShootingIntervals = 2000;
constexpr int kMaxBracketSteps = 200;

// -u'' = k max(u,0)^p with u(0) = 0, u'(0) = slope. Past a zero crossing the trajectory
// continues linearly, so u(1) < 0 exactly when the bump closes before x = 1.
class Shooter {
public:
    Shooter(double k, double p, std::size_t intervals)
        : k_(k), p_(p), intervals_(intervals), h_(1.0 / static_cast<double>(intervals)) {}

    double end_value(double slope) const { return integrate(slope, nullptr); }

    std::vector<double> trajectory(double slope) const {
        std::vector<double> u(intervals_ + 1);
        integrate(slope, &u);
        return u;
    }

    double solve_slope(double hint) const {
        double lo = hint;
        double hi = hint;
        int steps = 0;
        if (end_value(hint) < 0.0) {
            do {
                hi = lo;
                lo *= 0.5;
                if (++steps > kMaxBracketSteps) break;
            } while (end_value(lo) < 0.0);
        } else {
            do {
                lo = hi;
                hi *= 2.0;
                if (++steps > kMaxBracketSteps) break;
            } while (end_value(hi) >= 0.0);
        }
        if (steps > kMaxBracketSteps) throw ConvergenceFailure("shoot_local: slope bracket not found");
        return numerics::find_root([this](double s) { return end_value(s); }, lo, hi,
                                   {.abs_tol = 1e-300});
    }

private:
    double accel(double u) const { return u > 0.0 ? -k_ * std::pow(u, p_) : 0.0; }

    double integrate(double slope, std::vector<double>* out) const {
        double u = 0.0;
        double v = slope;
        if (out) (*out)[0] = u;
        for (std::size_t i = 0; i < intervals_; ++i) {
            const double k1u = v;
            const double k1v = accel(u);
            const double k2u = v + 0.5 * h_ * k1v;
            const double k2v = accel(u + 0.5 * h_ * k1u);
            const double k3u = v + 0.5 * h_ * k2v;
            const double k3v = accel(u + 0.5 * h_ * k2u);
            const double k4u = v + h_ * k3v;
            const double k4v = accel(u + h_ * k3u);
            u += h_ / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
            v += h_ / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
            if (out) (*out)[i + 1] = u;
        }
        return u;
    }

    double k_;
    double p_;
    std::size_t intervals_;
    double h_;
};

std::size_t substeps_for(std::size_t n) {
    const std::size_t out_intervals = n - 1;
    return (kMinShootingIntervals + out_intervals - 1) / out_intervals;
}

struct ShotResult {
    double slope = 0.0;
    double norm_pp = 0.0;  // ∫ u^p on the fine grid
};

ShotResult shoot_norm(const Shooter& shooter, double p, std::size_t intervals, double hint) {
    ShotResult res;
    res.slope = shooter.solve_slope(hint);
    const auto u = shooter.trajectory(res.slope);
    std::vector<double> up(u.size());
    std::transform(u.begin(), u.end(), up.begin(),
                   [p](double x) { return x > 0.0 ? std::pow(x, p) : 0.0; });
    res.norm_pp = numerics::simpson(up, 1.0 / static_cast<double>(intervals));
    return res;
}

}  // namespace

double grid_p_integral(const std::vector<double>& values, double p) {
    const std::size_t n = values.size();
    if (n < 2) throw InvalidParameter("grid_p_integral: need at least two samples");
    std::vector<double> up(n);
    std::transform(values.begin(), values.end(), up.begin(),
                   [p](double x) { return std::pow(std::abs(x), p); });
    const double h = 1.0 / static_cast<double>(n - 1);
    if (n % 2 == 1 && n >= 3) return numerics::simpson(up, h);
    double sum = 0.5 * (up.front() + up.back());
    for (std::size_t i = 1; i + 1 < n; ++i) sum += up[i];
    return h * sum;
}

SolutionProfile shoot_local(double A, double lambda, double p, std::size_t n) {
    if (!(A > 0.0) || !std::isfinite(A)) throw InvalidParameter("shoot_local: A must be > 0");
    if (!(lambda > 0.0)) throw InvalidParameter("shoot_local: lambda must be > 0");
    if (!(p > 1.0)) throw InvalidParameter("shoot_local: p must be > 1");
    if (n < 3 || n % 2 == 0) throw InvalidParameter("shoot_local: grid size must be odd and >= 3");

    const std::size_t sub = substeps_for(n);
    const std::size_t intervals = sub * (n - 1);
    const Shooter shooter(lambda / A, p, intervals);
    const double slope = shooter.solve_slope(1.0);
    const auto fine = shooter.trajectory(slope);

    const double amplitude = *std::max_element(fine.begin(), fine.end());
    if (std::abs(fine.back()) > 1e-10 * std::max(1.0, amplitude)) {
        throw ConvergenceFailure("shoot_local: u(1) did not reach zero");
    }

    SolutionProfile prof;
    prof.grid = uniform_grid(n);
    prof.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) prof.values[i] = std::max(0.0, fine[i * sub]);
    prof.values.back() = 0.0;
    prof.amplitude = amplitude;
    std::vector<double> up(fine.size());
    std::transform(fine.begin(), fine.end(), up.begin(),
                   [p](double x) { return x > 0.0 ? std::pow(x, p) : 0.0; });
    prof.scale_t = std::pow(numerics::simpson(up, 1.0 / static_cast<double>(intervals)), 1.0 / p);
    prof.source = "shooting";
    return prof;
}

std::vector<SolutionProfile> solve_nonlocal_by_coefficient(const ProblemParams& params,
                                                           std::size_t n) {
    params.validate();
    if (!(params.p > 1.0)) throw InvalidParameter("coefficient solver: p must be > 1");
    const double b = params.b;
    const double p = params.p;
    const double q = params.q;
    const double lambda = params.lambda;
    const std::size_t intervals = substeps_for(std::max<std::size_t>(n, 3)) *
                                  (std::max<std::size_t>(n, 3) - 1);

    // Slope hints are carried along the scan; neighbouring A values have close slopes.
    double hint = 1.0;
    auto residual = [&](double log_a) {
        const double a = std::exp(log_a);
        const Shooter shooter(lambda / a, p, intervals);
        const auto shot = shoot_norm(shooter, p, intervals, hint);
        hint = shot.slope;
        return std::pow(shot.norm_pp + b, q) - a;
    };

    constexpr std::size_t kScanPoints = 200;
    const double scale = std::pow(b, q) + 1.0;
    const double log_lo = std::log(1e-6 * scale);
    const double log_hi = std::log(1e6 * scale);
    std::vector<double> log_a(kScanPoints);
    std::vector<double> f(kScanPoints);
    for (std::size_t i = 0; i < kScanPoints; ++i) {
        log_a[i] = log_lo + (log_hi - log_lo) * static_cast<double>(i) /
                                static_cast<double>(kScanPoints - 1);
        f[i] = residual(log_a[i]);
    }

    std::vector<double> roots;
    for (std::size_t i = 0; i + 1 < kScanPoints; ++i) {
        if (f[i] == 0.0) {
            roots.push_back(std::exp(log_a[i]));
        } else if (std::signbit(f[i]) != std::signbit(f[i + 1]) && f[i + 1] != 0.0) {
            hint = 1.0;
            const double r = numerics::find_root(residual, log_a[i], log_a[i + 1],
                                                 {.abs_tol = 1e-14});
            roots.push_back(std::exp(r));
        }
    }
    if (f.back() == 0.0) roots.push_back(std::exp(log_a.back()));

    std::vector<SolutionProfile> out;
    out.reserve(roots.size());
    for (double a : roots) {
        auto prof = shoot_local(a, lambda, p, n);
        prof.params = params;
        prof.source = "coefficient-shooting";
        out.push_back(std::move(prof));
    }
    return out;
}

ResidualReport residual_check(const SolutionProfile& profile, const ProblemParams& params) {
    params.validate();
    const std::size_t n = profile.values.size();
    if (n < 5 || profile.grid.size() != n) {
        throw InvalidParameter("residual_check: need a grid of at least 5 points");
    }
    const double h = 1.0 / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(profile.grid[i] - static_cast<double>(i) * h) > 1e-12) {
            throw InvalidParameter("residual_check: grid must be uniform on [0, 1]");
        }
    }
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (!(profile.values[i] > 0.0)) {
            throw InvalidParameter("residual_check: profile must be positive inside (0, 1)");
        }
    }
    const auto& u = profile.values;
    const double coef = std::pow(grid_p_integral(u, params.p) + params.b, params.q);
    const double alpha = *std::max_element(u.begin(), u.end());

    ResidualReport rep;
    rep.grid_n = n;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double upp = (u[i + 1] - 2.0 * u[i] + u[i - 1]) / (h * h);
        const double r = coef * upp + params.lambda * std::pow(u[i], params.p);
        rep.max_abs = std::max(rep.max_abs, std::abs(r));
    }
    rep.scale = std::max(params.lambda * std::pow(alpha, params.p), 1.0);
    rep.normalized = rep.max_abs / rep.scale;
    return rep;
}

}  // namespace nlbif
