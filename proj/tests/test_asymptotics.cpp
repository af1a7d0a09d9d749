#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "nlbif/asymptotics.hpp"
#include "nlbif/branch.hpp"
#include "nlbif/error.hpp"
#include "nlbif/groundstate.hpp"
#include "oracles.hpp"

using namespace nlbif;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("b = 0 amplitude law") {
    const auto gs2 = build_ground_state(2.0);
    CHECK(rel(thm11_lambda_of_alpha(1.7, 2.0, 1.0, gs2), 4.0 * gs2.L_p * 1.7) <= 1e-15);
    for (double p : {1.5, 3.0, 6.0}) {
        const auto gs = build_ground_state(p);
        const double m = 2.0 / (p + 1);
        CHECK(rel(thm11_lambda_of_alpha(0.8, p, 2.0, gs),
                  2 * (p + 1) * m * m * std::pow(0.8, p + 1)) <= 1e-13);
    }
    // round trip through the branch solver
    const auto r = solve_branches({0.0, 2.0, 1.0, 6.0}, gs2);
    const double alpha = *r.t_lower * gs2.xi / gs2.norm_p;
    CHECK(rel(thm11_lambda_of_alpha(alpha, 2.0, 1.0, gs2), 6.0) <= 1e-8);
    for (auto [p, q] : {std::pair{3.0, 2.0}, {1.5, 0.7}}) {
        const auto gs = build_ground_state(p);
        const auto u = solve_branches({0.0, p, q, 123.0}, gs);
        CHECK(rel(thm11_lambda_of_alpha(*u.t_lower * gs.xi / gs.norm_p, p, q, gs), 123.0) <=
              1e-8);
    }
    CHECK(thm11_p1_lambda_of_alpha(1.0, 2.0) == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(thm11_p1_lambda_of_alpha(0.5, 1.0) == doctest::Approx(std::numbers::pi).epsilon(1e-15));
    CHECK_THROWS_AS(thm11_lambda_of_alpha(1.0, 1.0, 1.0, gs2), InvalidParameter);
    CHECK_THROWS_AS(thm11_lambda_of_alpha(-1.0, 2.0, 1.0, gs2), InvalidParameter);
}

TEST_CASE("p = 2, q = 1 exact roots") {
    const auto gs = build_ground_state(2.0);
    const auto r = thm12_exact(1.0, 20.0, gs);
    REQUIRE(r.has_value());
    CHECK(r->first == doctest::Approx(0.514271716161627954738).epsilon(1e-14));
    CHECK(r->second == doctest::Approx(1.94449737089121748813).epsilon(1e-14));
    const auto fold = thm12_exact(1.0, 2.0 * gs.norm_p, gs);
    REQUIRE(fold.has_value());
    CHECK(fold->first == doctest::Approx(1.0).epsilon(1e-7));
    CHECK(fold->second == doctest::Approx(1.0).epsilon(1e-7));
    CHECK_FALSE(thm12_exact(1.0, 16.0, gs).has_value());
    const auto small_b = thm12_exact(1e-12, 20.0, gs);
    CHECK(small_b->first < 1e-11);
    CHECK(small_b->second == doctest::Approx(20.0 / gs.norm_p).epsilon(1e-10));
    CHECK_THROWS_AS(thm12_exact(1.0, 20.0, build_ground_state(3.0)), InvalidParameter);
}

TEST_CASE("q = 1 curves") {
    for (double p : {1.5, 2.0, 3.0}) {
        CAPTURE(p);
        const auto gs = build_ground_state(p);
        const double np = std::pow(gs.norm_p, p);
        const auto big = thm13_curves(1e8, 1.0, p, gs);
        CHECK(rel(big.lambda_upper / 1e8, np / gs.xi) <= 1e-10);
        const auto small = thm13_curves(1e-6, 1.0, p, gs);
        CHECK(rel(small.lambda_lower * std::pow(1e-6, p - 1), std::pow(gs.xi, p - 1)) <= 1e-6);

        // the root t of g at λ maps to α = tξ/‖W_p‖_p with λ on the curve
        const auto r = solve_branches({0.8, p, 1.0, 200.0}, gs);
        for (double t : {*r.t_lower, *r.t_upper}) {
            const auto c = thm13_curves(t * gs.xi / gs.norm_p, 0.8, p, gs);
            CHECK(rel(c.lambda_upper, 200.0) <= 1e-10);
            CHECK(rel(c.lambda_lower, 200.0) <= 1e-10);
        }
    }
}

TEST_CASE("large lambda constants") {
    const auto gs = build_ground_state(2.0);
    const auto a = thm14_coefficients(1.0, 2.0, 2.0, 1e6, gs);
    CHECK(a.m == doctest::Approx(std::cbrt(1.0 / gs.norm_p)).epsilon(1e-15));
    CHECK(a.k == doctest::Approx(std::cbrt(1.0 / (4.0 * gs.norm_p))).epsilon(1e-15));
    CHECK(a.upper.leading_exponent == doctest::Approx(1.0 / 3));
    CHECK(a.upper.correction_exponent == doctest::Approx(-1.0 / 3));
    CHECK(a.lower.leading_exponent == -1.0);
    CHECK(a.lower.correction_exponent == -3.0);

    // b = 0: corrections vanish, leading term is the exact root
    for (double q : {0.8, 1.0, 2.0}) {
        const auto z = thm14_coefficients(0.0, 2.0, q, 321.0, gs);
        CHECK(z.upper.correction == 0.0);
        const auto r = solve_branches({0.0, 2.0, q, 321.0}, gs);
        CHECK(rel(z.upper.predicted(), *r.t_lower) <= 1e-13);
    }
}

TEST_CASE("q = 1 upper correction reduces to -b (λ‖W‖^{1-p})^{1-p}") {
    for (double p : {1.5, 2.0, 4.0}) {
        const auto gs = build_ground_state(p);
        const double lam = 1e3;
        const auto a = thm14_coefficients(0.6, p, 1.0, lam, gs);
        const double c = lam * std::pow(gs.norm_p, 1.0 - p);
        CHECK(rel(a.upper.leading, c) <= 1e-13);
        CHECK(rel(a.upper.correction, -0.6 * std::pow(c, 1.0 - p)) <= 1e-13);
    }
}

TEST_CASE("q = 1 asymptotic roots agree with the curves to first order") {
    // α on the upper curve: λ = Aα + Bα^{1-p}; invert to first order and compare with t2_pred.
    for (double p : {2.0, 3.0}) {
        const auto gs = build_ground_state(p);
        const double lam = 1e5, b = 1.0;
        const auto a = thm14_coefficients(b, p, 1.0, lam, gs);
        const double A = std::pow(gs.norm_p, p) / gs.xi;
        const double B = b * std::pow(gs.xi, p - 1);
        const double a0 = lam / A;
        const double alpha = a0 - B * std::pow(a0, 1 - p) / A;
        const double t_curve = alpha * gs.norm_p / gs.xi;
        CHECK(rel(a.upper.predicted(), t_curve) <= 1e-12);
    }
}

TEST_CASE("scaled solvers reproduce the roots") {
    for (auto [b, p, q, lam] : {std::tuple{1.0, 2.0, 1.0, 50.0}, {1.0, 2.0, 2.0, 1e4},
                                {0.5, 3.0, 2.0, 1e6}, {2.0, 1.5, 0.8, 300.0}}) {
        const auto gs = build_ground_state(p);
        const auto r = solve_branches({b, p, q, lam}, gs);
        REQUIRE(r.kind == RootKind::Pair);
        const auto up = solve_upper_scaled(b, p, q, lam, gs);
        const auto lo = solve_lower_scaled(b, p, q, lam, gs);
        CHECK(rel(up.leading * (1 + up.offset), *r.t_upper) <= 1e-12);
        CHECK(rel(lo.leading * (1 + lo.offset), *r.t_lower) <= 1e-12);
    }
    const auto gs = build_ground_state(2.0);
    CHECK_THROWS_AS(solve_lower_scaled(0.0, 2.0, 1.0, 10.0, gs), NotApplicable);
}

TEST_CASE("p = 2, q = 1 remainder ratios against the exact radical") {
    const auto gs = build_ground_state(2.0);
    const double lams[] = {1e2, 1e3, 1e4, 1e5, 1e6};
    const auto samples = measure_remainders(1.0, 2.0, 1.0, lams, gs);
    REQUIRE(samples.size() == 10);
    for (std::size_t i = 0; i < 5; ++i) {
        const double c = lams[i] / gs.norm_p;
        const double s = std::sqrt(c * c - 4.0);
        const auto& up = samples[2 * i];
        const auto& low = samples[2 * i + 1];
        CHECK(up.branch == "upper");
        CHECK(low.branch == "lower");
        // t2 - c = -2/(c+s) and predicted -1/c
        CHECK(rel(up.ratio, 2.0 * c / (c + s)) <= 1e-9);
        // t1 - 1/c = (c-s)/(c(c+s)) = 4/(c(c+s)^2) and predicted 1/c^3
        CHECK(rel(low.ratio, 4.0 * c * c / ((c + s) * (c + s))) <= 1e-9);
        const auto [q1, q2] = testref::quadratic_roots(1.0, lams[i], gs.norm_p);
        CHECK(rel(up.t_numeric, q2) <= 1e-13);
        CHECK(rel(low.t_numeric, q1) <= 1e-13);
    }
}

TEST_CASE("remainder ratios tend to one") {
    for (auto [b, p, q] : {std::tuple{1.0, 2.0, 2.0}, {0.5, 3.0, 2.0}, {1.0, 1.5, 0.8}}) {
        const auto gs = build_ground_state(p);
        const double lams[] = {1e3, 1e4, 1e5, 1e6};
        const auto s = measure_remainders(b, p, q, lams, gs);
        for (const char* br : {"upper", "lower"}) {
            double prev = INFINITY;
            for (const auto& x : s) {
                if (x.branch != br) continue;
                REQUIRE_FALSE(x.skipped);
                const double dev = std::abs(x.ratio - 1.0);
                CHECK(dev < prev);
                prev = dev;
            }
            CHECK(prev < 0.05);
        }
    }
}

TEST_CASE("remainder bookkeeping") {
    const auto gs = build_ground_state(2.0);
    const double lams[] = {1.0, 100.0};
    const auto s = measure_remainders(1.0, 2.0, 1.0, lams, gs);
    CHECK(s[0].skipped);
    CHECK(s[1].skipped);
    CHECK(std::isnan(s[0].ratio));
    CHECK_FALSE(s[2].skipped);

    const auto z = measure_remainders(0.0, 2.0, 2.0, lams, gs);
    for (const auto& x : z) {
        if (x.branch == "upper") {
            CHECK(x.measured == 0.0);
            CHECK(x.ratio == 1.0);
        } else {
            CHECK(x.skipped);
        }
    }
}
