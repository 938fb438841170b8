#pragma once

#include "milgrowth/demand.hpp"
#include "milgrowth/growth_model.hpp"

#include <random>
#include <utility>

// Randomized-input helpers shared by the unit and acceptance suites.
// Everything is seeded explicitly so failures reproduce.
namespace test_support {

inline milgrowth::GrowthParams random_growth_params(std::mt19937& rng) {
    std::uniform_real_distribution<double> savings(0.05, 0.5);
    std::uniform_real_distribution<double> depreciation(0.01, 0.2);
    std::uniform_real_distribution<double> productivity(0.05, 1.0);
    std::uniform_real_distribution<double> innovation(0.0, 8.0);
    std::uniform_real_distribution<double> distortion(0.0, 150.0);
    return {savings(rng), depreciation(rng), productivity(rng), innovation(rng),
            distortion(rng)};
}

inline milgrowth::RegimePoint random_regime(std::mt19937& rng) {
    std::uniform_real_distribution<double> burden(0.0, 0.3);
    std::uniform_real_distribution<double> destruction(0.0, 0.1);
    return {burden(rng), destruction(rng)};
}

inline double growth_factor(const milgrowth::GrowthParams& p,
                            const milgrowth::RegimePoint& r) {
    double uplift = 1.0 + p.innovation_gain * r.military_burden -
                    p.distortion_drag * r.military_burden * r.military_burden;
    return 1.0 - p.depreciation - r.destruction_rate +
           p.savings_rate * (1.0 - r.military_burden) * p.base_productivity * uplift;
}

/// Parameter/regime pair whose growth factor stays clearly positive, so
/// stepping and multi-period simulation cannot annihilate.
inline std::pair<milgrowth::GrowthParams, milgrowth::RegimePoint>
random_step_case(std::mt19937& rng) {
    for (;;) {
        milgrowth::GrowthParams params = random_growth_params(rng);
        milgrowth::RegimePoint regime = random_regime(rng);
        if (growth_factor(params, regime) > 0.05) {
            return {params, regime};
        }
    }
}

/// Stable goods-market draw: the multiplier denominator stays >= 0.02.
inline milgrowth::DemandParams random_stable_demand(std::mt19937& rng) {
    std::uniform_real_distribution<double> propensity(0.1, 0.9);
    std::uniform_real_distribution<double> tax(0.05, 0.6);
    std::uniform_real_distribution<double> accelerator(0.01, 0.6);
    std::uniform_real_distribution<double> level(0.0, 50.0);
    std::uniform_real_distribution<double> sensitivity(1.0, 50.0);
    std::uniform_real_distribution<double> rate(0.0, 0.1);
    for (;;) {
        milgrowth::DemandParams params;
        params.autonomous_consumption = level(rng);
        params.consumption_propensity = propensity(rng);
        params.tax_rate = tax(rng);
        params.autonomous_investment = level(rng);
        params.investment_accelerator = accelerator(rng);
        params.interest_sensitivity = sensitivity(rng);
        params.interest_rate = rate(rng);
        params.civilian_spending = level(rng);
        params.military_spending = level(rng);
        double denominator = 1.0 -
                             params.consumption_propensity * (1.0 - params.tax_rate) -
                             params.investment_accelerator;
        if (denominator >= 0.02) {
            return params;
        }
    }
}

} // namespace test_support
