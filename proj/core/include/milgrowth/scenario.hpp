#pragma once

#include "milgrowth/growth_model.hpp"

#include <string>
#include <vector>

namespace milgrowth {

/// Piecewise-constant regime schedule over a finite horizon of discrete
/// periods 0 .. horizon-1. Each entry applies from its start period until the
/// next entry begins.
struct Schedule {
    struct Entry {
        int start = 0; // first period the regime applies to
        RegimePoint regime;
    };

    std::vector<Entry> entries;
    int horizon = 0; // number of simulated periods, >= 1

    /// The entry active in `period`. Requires a validated schedule and
    /// 0 <= period < horizon.
    const RegimePoint& regime_at(int period) const;
};

/// A schedule holding one regime for the whole horizon.
Schedule constant_schedule(const RegimePoint& regime, int horizon);

/// Throws ValidationError unless: horizon >= 1, entries non-empty, first entry
/// starts at 0, starts strictly increasing and all < horizon, regimes in range.
void validate(const Schedule& schedule, const std::string& prefix = "");

struct Country {
    std::string name;
    GrowthParams params;
    double initial_capital = 100.0; // K0, > 0
};

void validate(const Country& country, const std::string& prefix = "");

/// One simulated period. capital and output are start-of-period values; the
/// investment and growth fields describe the transition out of the period.
struct TrajectoryPoint {
    int period = 0;
    double military_burden = 0.0;
    double destruction_rate = 0.0;
    double capital = 0.0;
    double output = 0.0;              // productivity(m) * capital
    double civilian_investment = 0.0;
    double realized_growth = 0.0;
};

struct Trajectory {
    std::vector<TrajectoryPoint> periods;
    double terminal_capital = 0.0; // capital after the last period's step
    double terminal_output = 0.0;  // terminal capital valued at the last regime's productivity
};

/// Run the capital recursion K_{t+1} = (1 - delta - d_t) K_t + s (1-m_t) A(m_t) K_t.
/// Throws ValidationError on bad inputs and AnnihilationError (carrying the
/// failing period) if capital would drop to or below zero.
Trajectory simulate(const Country& country, const Schedule& schedule);

/// One country's peace-vs-war comparison row.
struct CountryComparison {
    std::string country;
    double peace_growth = 0.0;
    double war_growth = 0.0;
    /// Compounded growth-factor ratio ((1+g_war)/(1+g_peace))^horizon:
    /// war terminal capital relative to the peace path's.
    double terminal_ratio = 0.0;
    /// Peace output minus war output, per period (output levels, so the war
    /// path's productivity uplift shows up here).
    std::vector<double> output_loss;
};

struct ComparisonReport {
    int horizon = 0;
    std::vector<CountryComparison> countries;
};

struct CountryScenario {
    Country country;
    RegimePoint peace;
    RegimePoint war;
};

/// Evaluate each country under its constant peace and war regimes.
/// Rows keep the input order.
ComparisonReport peace_war_table(const std::vector<CountryScenario>& scenarios,
                                 int horizon = 10);

struct CounterfactualLoss {
    /// gap[t] = counterfactual output - actual output in period t.
    std::vector<double> period_gap;
    double cumulative_gap = 0.0;
    /// Actual terminal capital over counterfactual terminal capital: the
    /// compounded growth-factor ratio of the two paths.
    double terminal_ratio = 0.0;
};

/// Simulate both schedules for the same country and difference the outputs.
/// Throws HorizonMismatchError when the horizons differ.
CounterfactualLoss counterfactual_loss(const Country& country, const Schedule& actual,
                                       const Schedule& counterfactual);

} // namespace milgrowth
