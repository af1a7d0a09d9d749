#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nlbif/groundstate.hpp"
#include "nlbif/params.hpp"
#include "nlbif/profile.hpp"

namespace nlbif {

// Every positive solution is u = t · W_p / ‖W_p‖_p with t = ‖u‖_p a positive root of
//   g(t) = (t^p + b)^q - λ ‖W_p‖_p^{1-p} t^{p-1}.

enum class RootKind { NoSolution, Tangent, Pair, Unique };

std::string_view to_string(RootKind kind);

struct BranchRoots {
    RootKind kind = RootKind::NoSolution;
    std::optional<double> t0;       ///< critical point of g (b > 0 only)
    std::optional<double> t_lower;  ///< t1 (pair), the double root (tangent) or the root (unique)
    std::optional<double> t_upper;  ///< t2 (pair), otherwise equal to t_lower when present

    /// Labelled roots in increasing order: "lower"/"upper", "fold" or "unique".
    [[nodiscard]] std::vector<std::pair<std::string, double>> labelled() const;
};

struct ThresholdResult {
    double lambda0 = 0.0;
    double t_at_fold = 0.0;
    double alpha0 = 0.0;
};

struct BranchPoint {
    double lambda = 0.0;
    double t = 0.0;
    double alpha = 0.0;
    std::string branch;  ///< lower | upper | unique | fold
};

/// λ ‖W_p‖_p^{1-p}: the coefficient of t^{p-1} in g.
double g_coefficient(const ProblemParams& params, const GroundState& gs);

double g_eval(double t, const ProblemParams& params, const GroundState& gs);

/// Unique zero of  pq (t^p + b)^{q-1} t - (p-1) λ ‖W_p‖_p^{1-p}  (b > 0, p > 1).
double find_t0(const ProblemParams& params, const GroundState& gs);

/// Closed-form value of g at its critical point:
///   λ‖W_p‖_p^{1-p} / (pq t0) · (b(p-1) - (pq-p+1) t0^p).
double g_at_t0(double t0, const ProblemParams& params, const GroundState& gs);

BranchRoots solve_branches(const ProblemParams& params, const GroundState& gs);

/// |g(t)| <= 1e-10 · max(1, b^q, (t^p+b)^q) and g changes sign across t.
bool certify_root(double t, const ProblemParams& params, const GroundState& gs);

/// Fold point: closed form for q = 1, bisection on λ otherwise.
ThresholdResult threshold(double b, double p, double q, const GroundState& gs);

/// Fold point by bisection on λ ↦ sign g(t0(λ); λ), for any admissible q.
ThresholdResult threshold_bisection(double b, double p, double q, const GroundState& gs);

/// (λ, t, α) records for every root at each λ (ascending, positive).
std::vector<BranchPoint> sweep(double b, double p, double q, std::span<const double> lambda_grid,
                               const GroundState& gs);

/// p = 1, b = 0: the solution is α sin(πx) with λ = 2^q π^{2-q} α^q.
struct LinearCaseSolution {
    double alpha = 0.0;
    SolutionProfile profile;
};

LinearCaseSolution solve_p1(double b, double q, double lambda, std::size_t n = 1001);

/// sweep() for p = 1 (b must be 0); t = ‖u‖_1 = 2α/π.
std::vector<BranchPoint> sweep_p1(double q, std::span<const double> lambda_grid);

/// Log-uniform (or linear) λ grid with `num` points including both ends.
std::vector<double> lambda_grid(double lo, double hi, std::size_t num, bool log_spacing = true);

}  // namespace nlbif
