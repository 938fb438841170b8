#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "milgrowth/calibration.hpp"
#include "milgrowth/presets.hpp"
#include "test_support.hpp"

#include <cmath>
#include <random>

using namespace milgrowth;

TEST_CASE("base productivity inversion reproduces the preset values") {
    double baseline = solve_base_productivity(0.2, 0.05, 5.0, 60.0, {0.0, 0.0, 0.01});
    CHECK(baseline == doctest::Approx(0.30).epsilon(1e-12));

    GrowthParams us = presets::united_states();
    double recovered = solve_base_productivity(us.savings_rate, us.depreciation,
                                               us.innovation_gain, us.distortion_drag,
                                               {0.035, 0.0, 0.03535786875});
    CHECK(recovered == doctest::Approx(0.35).epsilon(1e-12));

    GrowthParams ir = presets::iran();
    double iran = solve_base_productivity(ir.savings_rate, ir.depreciation,
                                          ir.innovation_gain, ir.distortion_drag,
                                          {0.10, 0.03, -0.06165});
    CHECK(iran == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("base productivity round-trips through the growth rate") {
    std::mt19937 rng(1912);
    for (int i = 0; i < 200; ++i) {
        GrowthParams p = test_support::random_growth_params(rng);
        RegimePoint r = test_support::random_regime(rng);
        double uplift = 1.0 + p.innovation_gain * r.military_burden -
                        p.distortion_drag * r.military_burden * r.military_burden;
        if (uplift < 0.05) {
            continue;
        }
        GrowthObservation target{r.military_burden, r.destruction_rate, growth_rate(p, r)};
        double recovered = solve_base_productivity(p.savings_rate, p.depreciation,
                                                   p.innovation_gain, p.distortion_drag,
                                                   target);
        CHECK(std::abs(recovered - p.base_productivity) <=
              1e-9 * p.base_productivity);

        GrowthParams q = p;
        q.base_productivity = recovered;
        CHECK(std::abs(growth_rate(q, r) - target.growth) <= 1e-12);
    }
}

TEST_CASE("vanishing productivity uplift is a singularity") {
    GrowthObservation at_root{0.5, 0.0, 0.02};
    CHECK_THROWS_AS(solve_base_productivity(0.2, 0.05, 0.0, 4.0, at_root),
                    SingularityError);
}

TEST_CASE("a growth target implying nonpositive productivity is rejected") {
    GrowthObservation impossible{0.0, 0.0, -0.2};
    try {
        solve_base_productivity(0.2, 0.05, 5.0, 60.0, impossible);
        FAIL_CHECK("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(e.field_path() == "target.growth");
    }
}

TEST_CASE("innovation fit recovers the preset curvature from two growth points") {
    GrowthParams base = presets::baseline();
    GrowthObservation first{0.02, 0.0, 0.0132688};
    GrowthObservation second{0.05, 0.0, 0.0127};
    InnovationFit fit = fit_innovation(base.savings_rate, base.depreciation,
                                       base.base_productivity, first, second);
    CHECK(fit.innovation_gain == doctest::Approx(5.0).epsilon(1e-9));
    CHECK(fit.distortion_drag == doctest::Approx(60.0).epsilon(1e-9));
}

TEST_CASE("innovation fit recovers the sanctioned-economy curvature") {
    GrowthParams ir = presets::iran();
    GrowthObservation peace{0.03, 0.0, growth_rate(ir, {0.03, 0.0})};
    GrowthObservation war{0.10, 0.03, growth_rate(ir, {0.10, 0.03})};
    InnovationFit fit = fit_innovation(ir.savings_rate, ir.depreciation,
                                       ir.base_productivity, peace, war);
    CHECK(fit.innovation_gain == doctest::Approx(4.0).epsilon(1e-9));
    CHECK(fit.distortion_drag == doctest::Approx(70.0).epsilon(1e-9));
}

TEST_CASE("innovation fit round-trips for random parameter draws") {
    std::mt19937 rng(7171);
    std::uniform_real_distribution<double> phi(0.5, 8.0);
    std::uniform_real_distribution<double> chi(5.0, 150.0);
    std::uniform_real_distribution<double> burden(0.01, 0.3);
    for (int i = 0; i < 200; ++i) {
        GrowthParams p = test_support::random_growth_params(rng);
        p.innovation_gain = phi(rng);
        p.distortion_drag = chi(rng);

        double m1 = burden(rng);
        double m2 = burden(rng);
        if (std::abs(m1 - m2) < 0.005) {
            continue;
        }
        GrowthObservation first{m1, 0.0, growth_rate(p, {m1, 0.0})};
        GrowthObservation second{m2, 0.01, growth_rate(p, {m2, 0.01})};
        InnovationFit fit = fit_innovation(p.savings_rate, p.depreciation,
                                           p.base_productivity, first, second);
        CHECK(std::abs(fit.innovation_gain - p.innovation_gain) <=
              1e-9 * p.innovation_gain);
        CHECK(std::abs(fit.distortion_drag - p.distortion_drag) <=
              1e-9 * p.distortion_drag);
    }
}

TEST_CASE("coincident observations make the fit singular") {
    GrowthObservation first{0.05, 0.0, 0.012};
    GrowthObservation second{0.05, 0.0, 0.013};
    CHECK_THROWS_AS(fit_innovation(0.2, 0.05, 0.3, first, second), SingularityError);
}

TEST_CASE("zero-burden observations cannot identify the innovation terms") {
    GrowthObservation zero{0.0, 0.0, 0.01};
    GrowthObservation other{0.05, 0.0, 0.0127};
    CHECK_THROWS_AS(fit_innovation(0.2, 0.05, 0.3, zero, other), ValidationError);
    CHECK_THROWS_AS(fit_innovation(0.2, 0.05, 0.3, other, zero), ValidationError);
}

TEST_CASE("calibration validates shared parameters") {
    GrowthObservation ok{0.05, 0.0, 0.0127};
    GrowthObservation ok2{0.02, 0.0, 0.0132688};
    CHECK_THROWS_AS(solve_base_productivity(0.0, 0.05, 5.0, 60.0, ok), ValidationError);
    CHECK_THROWS_AS(solve_base_productivity(0.2, 1.0, 5.0, 60.0, ok), ValidationError);
    CHECK_THROWS_AS(fit_innovation(0.2, 0.05, 0.0, ok2, ok), ValidationError);
    CHECK_THROWS_AS(fit_innovation(0.2, 0.05, -1.0, ok2, ok), ValidationError);
}
