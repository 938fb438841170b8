#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "milgrowth/demand.hpp"
#include "test_support.hpp"

#include <cmath>
#include <random>

using namespace milgrowth;

namespace {

DemandParams worked_example() {
    DemandParams p;
    p.autonomous_consumption = 10.0;
    p.consumption_propensity = 0.8;
    p.tax_rate = 0.25;
    p.autonomous_investment = 5.0;
    p.investment_accelerator = 0.1;
    p.interest_sensitivity = 20.0;
    p.interest_rate = 0.05;
    p.civilian_spending = 10.0;
    p.military_spending = 5.0;
    return p;
}

double demand_identity_output(const DemandParams& p, double y) {
    double consumption = p.autonomous_consumption +
                         p.consumption_propensity * (1.0 - p.tax_rate) * y;
    double investment = p.autonomous_investment + p.investment_accelerator * y -
                        p.interest_sensitivity * p.interest_rate;
    return consumption + investment + p.civilian_spending + p.military_spending;
}

} // namespace

TEST_CASE("worked example: multiplier 10/3 and output 29/0.3") {
    GoodsMarket market(worked_example());
    DemandSolution sol = market.equilibrium();
    CHECK(sol.multiplier == doctest::Approx(10.0 / 3.0).epsilon(1e-14));
    CHECK(sol.output == doctest::Approx(29.0 / 0.3).epsilon(1e-14));
    CHECK(sol.output == doctest::Approx(96.6667).epsilon(1e-6));
    CHECK(sol.autonomous_component == doctest::Approx(80.0).epsilon(1e-14));
    CHECK(sol.output == sol.autonomous_component + sol.multiplier * 5.0);
}

TEST_CASE("near-unit multiplier when both propensities are tiny") {
    DemandParams p = worked_example();
    p.consumption_propensity = 0.01;
    p.tax_rate = 0.5;
    p.investment_accelerator = 0.005;
    GoodsMarket market(p);
    CHECK(market.multiplier() == doctest::Approx(1.0 / 0.99).epsilon(1e-14));
}

TEST_CASE("equilibrium output satisfies the goods-market identity") {
    std::mt19937 rng(2024);
    for (int i = 0; i < 400; ++i) {
        DemandParams p = test_support::random_stable_demand(rng);
        DemandSolution sol = GoodsMarket(p).equilibrium();
        double recomputed = demand_identity_output(p, sol.output);
        CHECK(std::abs(recomputed - sol.output) <=
              1e-10 * std::max(1.0, std::abs(sol.output)));
        CHECK(sol.multiplier > 0.0);
        CHECK(std::isfinite(sol.output));
    }
}

TEST_CASE("closed-form multiplier matches finite differences on both spending legs") {
    std::mt19937 rng(77);
    const double h = 1e-6;
    for (int i = 0; i < 200; ++i) {
        DemandParams p = test_support::random_stable_demand(rng);
        double mult = GoodsMarket(p).multiplier();

        DemandParams bumped = p;
        bumped.military_spending += h;
        double fd_military =
            (GoodsMarket(bumped).equilibrium().output - GoodsMarket(p).equilibrium().output) / h;
        CHECK(std::abs(fd_military - mult) <= 1e-6 * mult);

        bumped = p;
        bumped.civilian_spending += h;
        double fd_civilian =
            (GoodsMarket(bumped).equilibrium().output - GoodsMarket(p).equilibrium().output) / h;
        CHECK(std::abs(fd_civilian - mult) <= 1e-6 * mult);
    }
}

TEST_CASE("a unit of military spending raises output by exactly the multiplier") {
    std::mt19937 rng(31);
    for (int i = 0; i < 200; ++i) {
        DemandParams p = test_support::random_stable_demand(rng);
        DemandParams more = p;
        more.military_spending += 1.0;
        double before = GoodsMarket(p).equilibrium().output;
        double after = GoodsMarket(more).equilibrium().output;
        double mult = GoodsMarket(p).multiplier();
        CHECK(std::abs((after - before) - mult) <= 1e-9 * std::max(1.0, mult));
    }
}

TEST_CASE("multiplier rises with the consumption propensity and the accelerator") {
    std::mt19937 rng(99);
    for (int i = 0; i < 100; ++i) {
        DemandParams p = test_support::random_stable_demand(rng);
        double denom = 1.0 - p.consumption_propensity * (1.0 - p.tax_rate) -
                       p.investment_accelerator;
        if (denom < 0.03) {
            continue;
        }
        double mult = GoodsMarket(p).multiplier();

        DemandParams c = p;
        c.consumption_propensity += 0.01;
        CHECK(GoodsMarket(c).multiplier() > mult);

        DemandParams a = p;
        a.investment_accelerator += 0.01;
        CHECK(GoodsMarket(a).multiplier() > mult);

        DemandParams t = p;
        t.tax_rate += 0.01;
        CHECK(GoodsMarket(t).multiplier() < mult);
    }
}

TEST_CASE("an exactly zero denominator raises the instability error") {
    DemandParams p = worked_example();
    p.consumption_propensity = 0.9;
    p.tax_rate = 0.0;
    p.investment_accelerator = 0.1;
    try {
        GoodsMarket market(p);
        FAIL_CHECK("expected InstabilityError");
    } catch (const InstabilityError& e) {
        CHECK(std::abs(e.denominator()) <= 1e-15);
    }

    p = worked_example();
    p.consumption_propensity = 0.5;
    p.tax_rate = 0.2;
    p.investment_accelerator = 0.6;
    try {
        GoodsMarket market(p);
        FAIL_CHECK("expected InstabilityError");
    } catch (const InstabilityError& e) {
        CHECK(e.denominator() == 0.0);
    }
}

TEST_CASE("a negative denominator raises instability and reports its value") {
    DemandParams p = worked_example();
    p.consumption_propensity = 0.95;
    p.tax_rate = 0.1;
    p.investment_accelerator = 0.3;
    try {
        GoodsMarket market(p);
        FAIL_CHECK("expected InstabilityError");
    } catch (const InstabilityError& e) {
        CHECK(e.denominator() < 0.0);
        CHECK(std::abs(e.denominator() - (1.0 - 0.95 * 0.9 - 0.3)) < 1e-15);
    }
}

TEST_CASE("demand validation rejects out-of-range fields") {
    auto expect_field = [](DemandParams p, const std::string& field) {
        try {
            GoodsMarket market(p);
            FAIL_CHECK("expected ValidationError for " << field);
        } catch (const ValidationError& e) {
            CHECK(e.field_path() == field);
        }
    };

    DemandParams p = worked_example();
    p.consumption_propensity = 0.0;
    expect_field(p, "demand.consumption_propensity");
    p = worked_example();
    p.consumption_propensity = 1.0;
    expect_field(p, "demand.consumption_propensity");
    p = worked_example();
    p.tax_rate = -0.01;
    expect_field(p, "demand.tax_rate");
    p = worked_example();
    p.tax_rate = 1.0;
    expect_field(p, "demand.tax_rate");
    p = worked_example();
    p.investment_accelerator = 0.0;
    expect_field(p, "demand.investment_accelerator");
    p = worked_example();
    p.interest_sensitivity = -2.0;
    expect_field(p, "demand.interest_sensitivity");
    p = worked_example();
    p.autonomous_consumption = std::nan("");
    expect_field(p, "demand.autonomous_consumption");
}

TEST_CASE("a zero tax rate is a valid no-tax economy") {
    DemandParams p = worked_example();
    p.tax_rate = 0.0;
    GoodsMarket market(p);
    CHECK(market.multiplier() == doctest::Approx(10.0).epsilon(1e-12));
}
