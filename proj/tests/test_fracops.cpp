// Tests for grids, trajectories, CSV serialization, the product-integration
// J^alpha, the L1 Caputo derivative, reconstruction, and the power rule.
#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <sstream>

#include "fracstokes/fracops.hpp"
#include "fracstokes/time_grid.hpp"
#include "reference_values.hpp"

using namespace fracstokes;

namespace {

double sup_component_diff(const Trajectory& a, const Trajectory& b,
                          std::size_t first_node = 0) {
    double worst = 0.0;
    for (std::size_t j = first_node; j < a.values.size(); ++j) {
        for (std::size_t k = 0; k < a.values[j].size(); ++k) {
            worst = std::max(worst, std::fabs(a.values[j][k] - b.values[j][k]));
        }
    }
    return worst;
}

}  // namespace

TEST_CASE("grid factories produce the documented node laws", "[grid]") {
    auto u = TimeGrid::uniform(2.0, 8);
    REQUIRE(u.nodes.size() == 9);
    CHECK(u.nodes.front() == 0.0);
    CHECK(u.nodes.back() == 2.0);
    CHECK(u.nodes[3] == Catch::Approx(0.75).epsilon(1e-15));

    double r = 2.5;
    auto g = TimeGrid::graded(1.0, 16, r);
    for (std::size_t j = 0; j <= 16; ++j) {
        CHECK(g.nodes[j] == std::pow(static_cast<double>(j) / 16.0, r));
    }

    auto e = TimeGrid::graded_toward_end(1.0, 16, r);
    for (std::size_t j = 0; j <= 16; ++j) {
        INFO("j = " << j);
        CHECK(e.nodes[j] ==
              Catch::Approx(1.0 - std::pow(1.0 - static_cast<double>(j) / 16.0, r))
                  .margin(1e-15));
    }
    CHECK(e.nodes.back() == 1.0);

    // r = 1 degenerates to the uniform law for both graded kinds
    auto g1 = TimeGrid::graded(3.0, 10, 1.0);
    auto u1 = TimeGrid::uniform(3.0, 10);
    for (std::size_t j = 0; j <= 10; ++j) {
        CHECK(g1.nodes[j] == Catch::Approx(u1.nodes[j]).margin(1e-15));
    }
}

TEST_CASE("grid and trajectory validation rejects malformed input", "[grid][errors]") {
    CHECK_THROWS_AS(TimeGrid::uniform(1.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(TimeGrid::uniform(-1.0, 8), std::invalid_argument);
    CHECK_THROWS_AS(TimeGrid::graded(1.0, 8, 0.5), std::invalid_argument);

    TimeGrid bad;
    bad.nodes = {0.0, 0.5, 0.5, 1.0};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad.nodes = {0.1, 0.5, 1.0};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    Trajectory v;
    v.grid = TimeGrid::uniform(1.0, 2);
    v.values = {{1.0}, {2.0}};  // one sample short
    CHECK_THROWS_AS(v.validate(), std::invalid_argument);
    v.values = {{1.0}, {2.0}, {std::nan("")}};
    CHECK_THROWS_AS(v.validate(), std::invalid_argument);
    v.values = {{1.0}, {2.0, 3.0}, {4.0}};
    CHECK_THROWS_AS(v.validate(), std::invalid_argument);
}

TEST_CASE("CSV round-trips trajectories losslessly", "[csv]") {
    auto v = sample_trajectory(
        TimeGrid::graded(1.5, 7, 2.0),
        [](double t) {
            return std::vector<double>{std::sin(t), 1.0 / 3.0 + t, -t * t};
        },
        "roundtrip probe");
    std::ostringstream os;
    write_csv(os, v);
    const std::string text = os.str();
    CHECK(text.rfind("t,v0,v1,v2\n", 0) == 0);

    std::istringstream is(text);
    auto w = read_csv(is);
    REQUIRE(w.values.size() == v.values.size());
    REQUIRE(w.dim() == 3);
    for (std::size_t j = 0; j < v.values.size(); ++j) {
        CHECK(w.grid.nodes[j] == v.grid.nodes[j]);  // bitwise: 17 digits round-trip
        for (std::size_t k = 0; k < 3; ++k) CHECK(w.values[j][k] == v.values[j][k]);
    }
}

TEST_CASE("CSV rejects malformed input", "[csv][errors]") {
    std::istringstream no_header("x,y\n0,1\n");
    CHECK_THROWS_AS(read_csv(no_header), std::runtime_error);
    std::istringstream bad_number("t,v0\n0,zero\n");
    CHECK_THROWS_AS(read_csv(bad_number), std::runtime_error);
    std::istringstream time_only("t,v0\n0\n");
    CHECK_THROWS_AS(read_csv(time_only), std::runtime_error);
}

TEST_CASE("J^alpha of a constant matches the power rule", "[rl]") {
    auto one = sample_scalar_trajectory(TimeGrid::uniform(1.0, 64), [](double) { return 1.0; });
    auto j = riemann_liouville_integral(one, FracOrder{0.5});
    CHECK(j.values.front()[0] == 0.0);
    CHECK(j.values.back()[0] == Catch::Approx(testing::kTwoOverSqrtPi).epsilon(1e-12));
    // interior node: J^0.5[1](t) = 2 sqrt(t/pi)
    double t = j.grid.nodes[40];
    CHECK(j.values[40][0] ==
          Catch::Approx(2.0 * std::sqrt(t) / testing::kSqrtPi).epsilon(1e-12));
}

TEST_CASE("J^1 of t is t^2/2 exactly", "[rl]") {
    auto v = sample_scalar_trajectory(TimeGrid::uniform(2.0, 32), [](double t) { return t; });
    auto j = riemann_liouville_integral(v, FracOrder{1.0});
    for (std::size_t n = 1; n < j.values.size(); ++n) {
        double t = j.grid.nodes[n];
        CHECK(j.values[n][0] == Catch::Approx(0.5 * t * t).epsilon(1e-13));
    }
}

TEST_CASE("product integration is exact on affine trajectories", "[rl][property]") {
    // J^alpha[a + b t] = a t^alpha/Gamma(1+alpha) + b t^{1+alpha}/Gamma(2+alpha);
    // the linear interpolant reproduces affine data, so the discrete operator
    // must hit the closed form to round-off on any grid.
    std::mt19937_64 rng(20240917ULL);
    std::uniform_real_distribution<double> coef(-3.0, 3.0);
    std::uniform_real_distribution<double> ord(0.05, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        double a0 = coef(rng), a1 = coef(rng), b0 = coef(rng), b1 = coef(rng);
        double alpha = ord(rng);
        auto grid = (trial % 2 == 0) ? TimeGrid::uniform(1.7, 33)
                                     : TimeGrid::graded(1.7, 33, 2.0);
        auto v = sample_trajectory(grid, [&](double t) {
            return std::vector<double>{a0 + b0 * t, a1 + b1 * t};
        });
        auto j = riemann_liouville_integral(v, FracOrder{alpha});
        double worst = 0.0, scale = 0.0;
        for (std::size_t n = 0; n < grid.nodes.size(); ++n) {
            double t = grid.nodes[n];
            double e0 = a0 * std::pow(t, alpha) / fracstokes::gamma(1.0 + alpha) +
                        b0 * std::pow(t, 1.0 + alpha) / fracstokes::gamma(2.0 + alpha);
            double e1 = a1 * std::pow(t, alpha) / fracstokes::gamma(1.0 + alpha) +
                        b1 * std::pow(t, 1.0 + alpha) / fracstokes::gamma(2.0 + alpha);
            worst = std::max({worst, std::fabs(j.values[n][0] - e0),
                              std::fabs(j.values[n][1] - e1)});
            scale = std::max({scale, std::fabs(e0), std::fabs(e1)});
        }
        INFO("trial " << trial << " alpha " << alpha);
        CHECK(worst <= 1e-12 * std::max(scale, 1.0));
    }
}

TEST_CASE("J^0.6 of t^0.3 converges to the gamma-ratio value", "[rl]") {
    double prev = 0.0;
    for (std::size_t N : {256, 1024}) {
        auto v = sample_scalar_trajectory(TimeGrid::uniform(1.0, N),
                                          [](double t) { return std::pow(t, 0.3); });
        auto j = riemann_liouville_integral(v, FracOrder{0.6});
        double err = std::fabs(j.values.back()[0] - testing::kGammaRatio_13_19);
        if (prev > 0.0) CHECK(err < 0.5 * prev);
        prev = err;
    }
    CHECK(prev <= 2e-4);
}

TEST_CASE("J^0.4 of cos matches the quadrature oracle", "[rl]") {
    auto v = sample_scalar_trajectory(TimeGrid::uniform(1.0, 2048),
                                      [](double t) { return std::cos(t); });
    auto j = riemann_liouville_integral(v, FracOrder{0.4});
    CHECK(j.values.back()[0] == Catch::Approx(testing::kJ04Cos_at1).epsilon(1e-6));
}

TEST_CASE("semigroup composition J^0.3 J^0.4 = J^0.7 under refinement",
          "[rl][property]") {
    // The inner output behaves like t^0.4 near 0 whenever v(0) != 0, and
    // re-interpolating that startup shape costs a node-1 defect proportional
    // to t_1^{0.7} — scale-invariant on uniform grids, which caps the
    // sup-norm order there at 0.7.  Two honest readings of the semigroup
    // property, both verified here:
    //   (a) smooth v with a flat start (v(0) = v'(0) = 0) on uniform grids,
    //   (b) arbitrary smooth v on grids graded hard enough (r = 3 pushes the
    //       startup defect to order 2.1, below the interior order 2).
    SECTION("flat-start v on uniform grids") {
        std::vector<double> ns, errs;
        for (std::size_t N : {128, 256, 512}) {
            auto v = sample_scalar_trajectory(
                TimeGrid::uniform(1.0, N),
                [](double t) { return 1.0 - std::cos(t); });
            auto inner = riemann_liouville_integral(v, FracOrder{0.4});
            auto composed = riemann_liouville_integral(inner, FracOrder{0.3});
            auto direct = riemann_liouville_integral(v, FracOrder{0.7});
            ns.push_back(static_cast<double>(N));
            errs.push_back(sup_component_diff(composed, direct));
        }
        CHECK(errs.back() <= 1e-6);
        CHECK(detail::fit_loglog_slope(ns, errs) <= -1.8);
    }
    SECTION("v = cos on graded grids") {
        std::vector<double> ns, errs;
        for (std::size_t N : {128, 256, 512}) {
            auto v = sample_scalar_trajectory(TimeGrid::graded(1.0, N, 3.0),
                                              [](double t) { return std::cos(t); });
            auto inner = riemann_liouville_integral(v, FracOrder{0.4});
            auto composed = riemann_liouville_integral(inner, FracOrder{0.3});
            auto direct = riemann_liouville_integral(v, FracOrder{0.7});
            ns.push_back(static_cast<double>(N));
            errs.push_back(sup_component_diff(composed, direct));
        }
        CHECK(errs.back() <= 1e-5);
        CHECK(detail::fit_loglog_slope(ns, errs) <= -1.7);
    }
}

TEST_CASE("Caputo derivative of a constant vanishes with a node-0 sentinel",
          "[caputo]") {
    auto v = sample_trajectory(TimeGrid::graded(1.0, 32, 1.8), [](double) {
        return std::vector<double>{4.25, -1.5};
    });
    auto d = caputo_derivative(v, FracOrder{0.5});
    CHECK(std::isnan(d.values[0][0]));
    CHECK(std::isnan(d.values[0][1]));
    for (std::size_t j = 1; j < d.values.size(); ++j) {
        CHECK(d.values[j][0] == 0.0);
        CHECK(d.values[j][1] == 0.0);
    }
}

TEST_CASE("Caputo derivative of t^2 approaches 2/Gamma(2.5)", "[caputo]") {
    double prev = 0.0;
    for (std::size_t N : {512, 2048}) {
        auto v = sample_scalar_trajectory(TimeGrid::uniform(1.0, N),
                                          [](double t) { return t * t; });
        auto d = caputo_derivative(v, FracOrder{0.5});
        double err = std::fabs(d.values.back()[0] - testing::kTwoOverGamma25);
        if (prev > 0.0) CHECK(err < 0.5 * prev);
        prev = err;
    }
    CHECK(prev <= 1e-4);
}

TEST_CASE("Caputo derivative of t^alpha approaches Gamma(1+alpha) pointwise",
          "[caputo]") {
    // The limit is pointwise on (0,T]: at node 1 the L1 value is identically
    // 1/Gamma(2-alpha) for v = t^alpha on any grid (b_{0,1}(v_1 - v_0) =
    // t_1^{-alpha} t_1^{alpha} / Gamma(2-alpha)), so a sup over all nodes
    // carries a non-decaying startup constant.  We pin that constant exactly
    // and check convergence at fixed interior times.
    const double alpha = 0.6;
    const double r = (2.0 - alpha) / alpha;
    const double target = fracstokes::gamma(1.0 + alpha);
    double prev_end = 0.0, prev_mid = 0.0;
    for (std::size_t N : {512, 2048}) {
        auto grid = TimeGrid::graded(1.0, N, r);
        auto v = sample_scalar_trajectory(grid,
                                          [&](double t) { return std::pow(t, alpha); });
        auto d = caputo_derivative(v, FracOrder{alpha});
        CHECK(d.values[1][0] ==
              Catch::Approx(1.0 / fracstokes::gamma(2.0 - alpha)).epsilon(1e-10));
        std::size_t mid = 1;
        while (grid.nodes[mid] < 0.5) ++mid;
        double err_end = std::fabs(d.values.back()[0] - target);
        double err_mid = std::fabs(d.values[mid][0] - target);
        if (prev_end > 0.0) {
            CHECK(err_end < prev_end);
            CHECK(err_mid < prev_mid);
        }
        prev_end = err_end;
        prev_mid = err_mid;
    }
    CHECK(prev_end <= 1e-4);
    CHECK(prev_mid <= 1e-4);
}

TEST_CASE("discrete Caputo left-inverts the discrete integral", "[caputo][property]") {
    // w = J^alpha v vanishes at 0, so cD^alpha w = D^alpha w and the pair
    // reproduces v pointwise on (0,T].  Recovery cannot be uniform down to
    // t = 0: w inherits a t^alpha startup shape from v(0) != 0, and the L1
    // value at node 1 is then 1/(Gamma(1+alpha) Gamma(2-alpha)) + O(t_1) =
    // 4/pi for alpha = 1/2 — a scale-invariant defect on every grid.  The
    // per-node error decays like j^{-(2-alpha)} independently of N, so the
    // sup away from the startup layer meets the 5e-3 budget with margin.
    auto v = sample_scalar_trajectory(TimeGrid::uniform(1.0, 2048),
                                      [](double t) { return std::cos(t); });
    auto w = riemann_liouville_integral(v, FracOrder{0.5});
    auto back = caputo_derivative(w, FracOrder{0.5});
    CHECK(back.values[1][0] ==
          Catch::Approx(4.0 / 3.14159265358979323846).margin(1e-5));
    auto err_at = [&](std::size_t j) {
        return std::fabs(back.values[j][0] - v.values[j][0]);
    };
    CHECK(err_at(64) < err_at(16));
    CHECK(err_at(16) < err_at(4));
    std::size_t j0 = 1;
    while (back.grid.nodes[j0] < 0.05) ++j0;
    double sup = 0.0;
    for (std::size_t j = j0; j < back.values.size(); ++j) sup = std::max(sup, err_at(j));
    CHECK(sup <= 5e-3);
}

TEST_CASE("reconstruction maps 0 to the initial value and inverts Caputo",
          "[reconstruct]") {
    auto zero = sample_trajectory(TimeGrid::uniform(1.0, 16),
                                  [](double) { return std::vector<double>{0.0, 0.0}; });
    auto flat = reconstruct_from_caputo(zero, {2.5, -1.0}, FracOrder{0.7});
    for (const auto& row : flat.values) {
        CHECK(row[0] == 2.5);
        CHECK(row[1] == -1.0);
    }

    // g = Gamma(1+alpha) constant, v0 = 0 -> v = t^alpha (refinement limit)
    const double alpha = 0.5;
    auto g = sample_scalar_trajectory(TimeGrid::uniform(1.0, 1024), [&](double) {
        return fracstokes::gamma(1.0 + alpha);
    });
    auto v = reconstruct_from_caputo(g, {0.0}, FracOrder{alpha});
    CHECK(v.values.back()[0] == Catch::Approx(1.0).epsilon(1e-10));

    // round trip against the quadratic from the module contract
    auto q = sample_scalar_trajectory(TimeGrid::uniform(1.0, 1024),
                                      [](double t) { return (1.0 + t) * (1.0 + t); });
    auto dq = caputo_derivative(q, FracOrder{0.6});
    dq.values[0].assign(1, 0.0);  // replace the sentinel before re-integration
    auto back = reconstruct_from_caputo(dq, {1.0}, FracOrder{0.6});
    CHECK(sup_component_diff(back, q, 1) <= 1e-3);
}

TEST_CASE("both operators are linear to machine precision", "[property]") {
    std::mt19937_64 rng(77002211ULL);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    auto grid = TimeGrid::uniform(1.0, 64);
    for (int trial = 0; trial < 100; ++trial) {
        auto v = sample_trajectory(grid, [&](double) {
            return std::vector<double>{unit(rng), unit(rng), unit(rng)};
        });
        auto w = sample_trajectory(grid, [&](double) {
            return std::vector<double>{unit(rng), unit(rng), unit(rng)};
        });
        double a = 2.0 * unit(rng), b = 2.0 * unit(rng);
        Trajectory combo = v;
        for (std::size_t j = 0; j < combo.values.size(); ++j) {
            for (std::size_t k = 0; k < 3; ++k) {
                combo.values[j][k] = a * v.values[j][k] + b * w.values[j][k];
            }
        }
        FracOrder order{0.4};
        auto lhs = riemann_liouville_integral(combo, order);
        auto jv = riemann_liouville_integral(v, order);
        auto jw = riemann_liouville_integral(w, order);
        double worst = 0.0;
        for (std::size_t j = 0; j < lhs.values.size(); ++j) {
            for (std::size_t k = 0; k < 3; ++k) {
                worst = std::max(worst,
                                 std::fabs(lhs.values[j][k] - a * jv.values[j][k] -
                                           b * jw.values[j][k]));
            }
        }
        CHECK(worst <= 1e-13);

        auto dlhs = caputo_derivative(combo, order);
        auto dv = caputo_derivative(v, order);
        auto dw = caputo_derivative(w, order);
        worst = 0.0;
        for (std::size_t j = 1; j < dlhs.values.size(); ++j) {
            for (std::size_t k = 0; k < 3; ++k) {
                worst = std::max(worst,
                                 std::fabs(dlhs.values[j][k] - a * dv.values[j][k] -
                                           b * dw.values[j][k]));
            }
        }
        CHECK(worst <= 1e-11);
    }
}

TEST_CASE("power rule reference values and error handling", "[powerrule]") {
    CHECK(power_rule_reference(1.0, 1.0, FracOrder{0.5}, 1.0) ==
          Catch::Approx(testing::kTwoOverSqrtPi).epsilon(1e-13));
    CHECK(power_rule_reference(0.0, 2.0, FracOrder{0.5}, 3.0) == 0.0);
    CHECK(power_rule_reference(1.0, 0.3, FracOrder{0.6}, 2.0) ==
          Catch::Approx(testing::kPowerRule_03_06_2).epsilon(1e-13));
    // beta = alpha - 1 lands on a Gamma pole: D^alpha t^{alpha-1} = 0
    CHECK(power_rule_reference(2.0, -0.5, FracOrder{0.5}, 1.7) == 0.0);
    CHECK_THROWS_AS(power_rule_reference(1.0, -1.0, FracOrder{0.5}, 1.0),
                    std::domain_error);
    CHECK_THROWS_AS(power_rule_reference(1.0, 1.0, FracOrder{0.5}, 0.0),
                    std::domain_error);
    CHECK_THROWS_AS(power_rule_reference(1.0, 1.0, FracOrder{1.5}, 1.0),
                    std::domain_error);
}

TEST_CASE("operators reject out-of-range orders", "[errors]") {
    auto v = sample_scalar_trajectory(TimeGrid::uniform(1.0, 8),
                                      [](double t) { return t; });
    CHECK_THROWS_AS(riemann_liouville_integral(v, FracOrder{0.0}), std::domain_error);
    CHECK_THROWS_AS(riemann_liouville_integral(v, FracOrder{1.5}), std::domain_error);
    CHECK_THROWS_AS(caputo_derivative(v, FracOrder{1.0}), std::domain_error);
    CHECK_THROWS_AS(caputo_derivative(v, FracOrder{0.0}), std::domain_error);
    CHECK_THROWS_AS(reconstruct_from_caputo(v, {1.0, 2.0}, FracOrder{0.5}),
                    std::invalid_argument);
}
