#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <sstream>

#include "cosetq/bounds.hpp"
#include "doctest.h"

using namespace cosetq;

namespace {

BoundCurve curve(const std::string& name, int w = 3) {
    BoundCurve c;
    c.name = name;
    c.w = w;
    return c;
}

double quartic_f(double rho) {
    double s = 1 - rho;
    return s * s * s * s + 4 * rho * s * s * s + 6 * rho * rho * s * s;
}

}  // namespace

TEST_CASE("entropy functions") {
    CHECK(entropy(0.5) == 1.0);
    CHECK(entropy(0.0) == 0.0);
    CHECK(entropy(1.0) == 0.0);
    CHECK(entropy(0.25) == doctest::Approx(2 - 0.75 * std::log2(3.0)).epsilon(1e-14));
    CHECK(entropy(0.25) == entropy(0.75));
    CHECK_THROWS_AS(entropy(-0.1), domain_error);
    CHECK_THROWS_AS(entropy(1.1), domain_error);

    CHECK(entropy4(0.75) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(entropy4(1.0) == doctest::Approx(0.5 * std::log2(3.0)));
    CHECK(entropy4(0.0) == 0.0);
    CHECK_THROWS_AS(entropy4(1.5), domain_error);
}

TEST_CASE("radius exponent matched to distance") {
    auto dr = rho_of_delta(kPlateauDelta);
    CHECK(dr.rho == doctest::Approx(0.25).epsilon(1e-13));
    CHECK(rho_of_delta(0.25).rho == doctest::Approx(0.5 - std::sqrt(3.0) / 4));
    CHECK_THROWS_AS(rho_of_delta(0.0), domain_error);
    CHECK_THROWS_AS(rho_of_delta(0.5), domain_error);
}

TEST_CASE("interval minimizer") {
    // pure quadratic: differences stay resolvable through every refinement
    auto pure = [](double x) { return (x - 0.3) * (x - 0.3); };
    auto p = minimize_on_interval(pure, 0.0, 1.0);
    CHECK(std::abs(p.argmin - 0.3) <= 1e-8);
    CHECK(p.value <= 1e-16);

    // a large constant offset drowns the curvature near the bottom in double
    // rounding, so the argmin is only good to the last resolvable window
    auto quad = [](double x) { return (x - 0.3) * (x - 0.3) + 2.0; };
    auto r = minimize_on_interval(quad, 0.0, 1.0);
    CHECK(std::abs(r.argmin - 0.3) <= 1e-5);
    CHECK(r.value == doctest::Approx(2.0).epsilon(1e-14));

    // minimum on the right boundary lands there exactly
    auto line = [](double x) { return -x; };
    CHECK(minimize_on_interval(line, 2.0, 5.0).argmin == 5.0);
    // and on the left
    auto rise = [](double x) { return x; };
    CHECK(minimize_on_interval(rise, 2.0, 5.0).argmin == 2.0);

    auto single = minimize_on_interval(quad, 0.7, 0.7);
    CHECK(single.argmin == 0.7);
    CHECK(single.value == doctest::Approx(2.16));

    CHECK_THROWS_AS(minimize_on_interval(quad, 1.0, 0.0), domain_error);
    OptimizerSettings bad;
    bad.grid_points = 1;
    CHECK_THROWS_AS(minimize_on_interval(quad, 0.0, 1.0, bad), domain_error);
}

TEST_CASE("catalog") {
    const auto& names = bound_catalog();
    REQUIRE(names.size() == 11);
    CHECK(names.front() == "gv");
    for (const auto& expected : {"gv", "lp1", "lp2", "bklm", "bhl", "is_general", "is_w3",
                                 "is_w4", "new_general", "new_w3", "new_w4"})
        CHECK(std::find(names.begin(), names.end(), expected) != names.end());
    CHECK_THROWS_AS(evaluate_bound(curve("nonsense"), 0.3), catalog_error);
    CHECK_THROWS_AS(evaluate_bound(curve("gv"), 0.0), domain_error);
    CHECK_THROWS_AS(evaluate_bound(curve("gv"), 0.51), domain_error);
    CHECK_THROWS_AS(evaluate_bound(curve("bklm", 0), 0.3), domain_error);
}

TEST_CASE("all curves stay inside [0, 1] and above the existence rate") {
    for (int w : {3, 4, 5}) {
        for (int i = 1; i <= 10; ++i) {
            double delta = 0.05 * i;
            double gv = evaluate_bound(curve("gv", w), delta);
            for (const auto& name : bound_catalog()) {
                // bhl runs a nested optimization; spot-checked separately
                if (name == "bhl") continue;
                double v = evaluate_bound(curve(name, w), delta);
                CHECK(std::isfinite(v));
                CHECK(v >= -1e-12);
                CHECK(v <= 1.0 + 1e-12);
                if (name == "lp1" || name == "lp2") CHECK(gv <= v + 1e-9);
            }
        }
    }
}

TEST_CASE("the two linear-programming bounds") {
    // they coincide once delta is large enough for the inner optimum to hit
    // the u = 1 - 2 delta boundary
    for (double delta : {0.30, 0.35, 0.40, 0.45}) {
        double l1 = evaluate_bound(curve("lp1"), delta);
        double l2 = evaluate_bound(curve("lp2"), delta);
        CHECK(std::abs(l1 - l2) < 1e-6);
        auto inner = lp2_optimization(delta);
        CHECK(std::abs(inner.argmin - (1 - 2 * delta)) < 1e-6);
        CHECK(inner.value == doctest::Approx(l2).epsilon(1e-12));
    }
    // strictly stronger at smaller delta
    double l1 = evaluate_bound(curve("lp1"), 0.20);
    double l2 = evaluate_bound(curve("lp2"), 0.20);
    CHECK(l1 - l2 > 1e-4);
}

TEST_CASE("bklm matches its formula") {
    for (int w : {3, 4, 6}) {
        double delta = 0.3;
        double expect = 1 - entropy(delta / 2) / entropy((1 - std::pow(1 - delta, w)) / 2);
        CHECK(evaluate_bound(curve("bklm", w), delta) == doctest::Approx(expect).epsilon(1e-13));
    }
}

TEST_CASE("shortening transform") {
    auto base = curve("lp1");
    for (double delta : {0.1, 0.2, 0.3}) {
        auto r = apply_shortening(base, 3, delta);
        CHECK(r.value <= evaluate_bound(base, delta) + 1e-12);  // t = 0 is admissible
        CHECK(r.argmin >= -1e-12);
        CHECK(r.argmin <= 1 - 2 * delta + 1e-9);
    }
    // at delta = 1/2 only t = 0 remains
    auto edge = apply_shortening(base, 3, 0.5);
    CHECK(edge.argmin == 0.0);
    CHECK(edge.value == doctest::Approx(evaluate_bound(base, 0.5)));

    // the shortened second LP bound beats the plain one where shortening bites
    double l2 = evaluate_bound(curve("lp2"), 0.3);
    double b = evaluate_bound(curve("bhl"), 0.3);
    CHECK(b <= l2 + 1e-9);
    CHECK(l2 - b > 1e-3);
}

TEST_CASE("w = 3 rate bound plateau and threshold") {
    CHECK(evaluate_bound(curve("new_w3"), 0.05) == 2.0 / 3.0);
    CHECK(evaluate_bound(curve("is_w3"), 0.05) == 2.0 / 3.0);
    double below = evaluate_bound(curve("new_w3"), kPlateauDelta - 1e-7);
    double above = evaluate_bound(curve("new_w3"), kPlateauDelta + 1e-7);
    CHECK(below == 2.0 / 3.0);
    CHECK(std::abs(above - below) < 1e-6);
    // past the threshold the curve follows (2/3) H4(3 rho)
    double delta = 0.3;
    double rho = rho_of_delta(delta).rho;
    CHECK(evaluate_bound(curve("new_w3"), delta) ==
          doctest::Approx(2.0 / 3.0 * entropy4(3 * rho)).epsilon(1e-13));
}

TEST_CASE("new curves dominate the earlier family") {
    std::vector<double> grid;
    for (int i = 2; i <= 9; ++i) grid.push_back(0.05 * i);
    for (int w : {3, 4, 5}) {
        auto rep = comparison_report(w, grid);
        CHECK(rep.ok);
        REQUIRE(rep.rows.size() == grid.size());
        for (const auto& row : rep.rows) {
            CHECK(row.ok);
            CHECK(row.new_general <= row.is_general + 1e-15);
            CHECK(row.new_w3 <= row.is_w3 + 1e-15);
            CHECK(row.new_w4 <= row.is_w4 + 1e-15);
        }
        // the correction-term improvement at delta = 0.3 exceeds w 2^(w^2+w+3)
        auto at03 = rep.rows[4];
        CHECK(at03.delta == doctest::Approx(0.3));
        CHECK(at03.correction_ratio > double(w) * std::exp2(double(w * w + w + 3)));
    }
}

TEST_CASE("ball exponent, w = 3") {
    // rho past 1/4: the minimum sits on the lambda = 1 boundary at 2/3
    auto flat = ball_exponent_bound(3, 0.3, BallVariant::w3);
    CHECK(flat.argmin == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(flat.value == doctest::Approx(2.0 / 3.0).epsilon(1e-12));

    // rho below 1/4: interior minimum at rho / (1 - 3 rho), value (2/3) H4(3 rho)
    double rho = 0.2;
    auto r = ball_exponent_bound(3, rho, BallVariant::w3);
    CHECK(r.argmin == doctest::Approx(rho / (1 - 3 * rho)).epsilon(1e-6));
    CHECK(r.value == doctest::Approx(2.0 / 3.0 * entropy4(3 * rho)).epsilon(1e-10));

    // at least as sharp as the competing exponent up to rho ~ 0.45; past
    // that the competing curve falls below 2/3 and the two cross
    for (int i = 1; i <= 22; ++i) {
        double p = i / 50.0;
        CHECK(ball_exponent_bound(3, p, BallVariant::w3).value <=
              ball_exponent_is_w3(p) + 1e-9);
    }
    CHECK(ball_exponent_is_w3(0.48) < 2.0 / 3.0 - 1e-3);
    CHECK(ball_exponent_is_w3(0.1) == doctest::Approx(0.1 + entropy(0.2) / 2));
    CHECK(ball_exponent_is_w3(0.3) == doctest::Approx(2.0 / 3.0));
    CHECK_THROWS_AS(ball_exponent_bound(4, 0.2, BallVariant::w3), domain_error);
}

TEST_CASE("ball exponent, w = 4 and general") {
    double rho = 0.3;
    double lam = rho / (1 - rho);
    auto r4 = ball_exponent_bound(4, rho, BallVariant::w4);
    CHECK(r4.argmin == doctest::Approx(lam).epsilon(1e-6));
    CHECK(r4.value ==
          doctest::Approx(entropy(rho) + 0.25 * std::log2(quartic_f(rho))).epsilon(1e-8));

    auto r5 = ball_exponent_bound(5, rho, BallVariant::general);
    CHECK(r5.argmin == doctest::Approx(lam).epsilon(1e-6));
    CHECK(r5.value ==
          doctest::Approx(entropy(rho) - std::log2(1 + std::pow(lam, 5)) / 5).epsilon(1e-8));

    CHECK_THROWS_AS(ball_exponent_bound(3, 0.2, BallVariant::w4), domain_error);
    CHECK_THROWS_AS(ball_exponent_bound(3, 0.0, BallVariant::general), domain_error);
    CHECK_THROWS_AS(ball_exponent_bound(3, 0.5, BallVariant::general), domain_error);
}

TEST_CASE("bound table CSV") {
    std::vector<BoundCurve> curves = {curve("gv"), curve("lp1")};
    std::vector<double> grid = {0.1, 0.2, 0.3};
    std::stringstream a, b;
    write_bound_table_csv(a, curves, grid, false, 3);
    write_bound_table_csv(b, curves, grid, false, 3);
    CHECK(a.str() == b.str());
    CHECK(a.str().rfind("delta,gv,lp1\n", 0) == 0);
    int rows = 0;
    for (char ch : a.str())
        if (ch == '\n') ++rows;
    CHECK(rows == 4);

    std::stringstream s;
    write_bound_table_csv(s, {curve("lp1")}, {0.2}, true, 3);
    CHECK(s.str().rfind("delta,lp1_shortened\n", 0) == 0);
}
