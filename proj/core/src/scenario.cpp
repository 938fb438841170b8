#include "milgrowth/scenario.hpp"

#include <cmath>
#include <string>

namespace milgrowth {

namespace {

std::string join(const std::string& prefix, const char* field) {
    return prefix.empty() ? std::string(field) : prefix + "." + field;
}

} // namespace

const RegimePoint& Schedule::regime_at(int period) const {
    std::size_t active = 0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i].start <= period) {
            active = i;
        } else {
            break;
        }
    }
    return entries[active].regime;
}

Schedule constant_schedule(const RegimePoint& regime, int horizon) {
    return Schedule{{Schedule::Entry{0, regime}}, horizon};
}

void validate(const Schedule& schedule, const std::string& prefix) {
    if (schedule.horizon < 1) {
        throw ValidationError(join(prefix, "horizon"), "must be >= 1");
    }
    if (schedule.entries.empty()) {
        throw ValidationError(join(prefix, "entries"), "must not be empty");
    }
    if (schedule.entries.front().start != 0) {
        throw ValidationError(join(prefix, "entries[0].start"),
                              "first entry must start at period 0");
    }
    for (std::size_t i = 0; i < schedule.entries.size(); ++i) {
        const auto& entry = schedule.entries[i];
        std::string where = join(prefix, "entries") + "[" + std::to_string(i) + "]";
        if (i > 0 && entry.start <= schedule.entries[i - 1].start) {
            throw ValidationError(where + ".start", "entry starts must be strictly increasing");
        }
        if (entry.start >= schedule.horizon) {
            throw ValidationError(where + ".start",
                                  "entry start must be < horizon (" +
                                      std::to_string(schedule.horizon) + ")");
        }
        validate(entry.regime, where);
    }
}

void validate(const Country& country, const std::string& prefix) {
    validate(country.params, join(prefix, "params"));
    if (!std::isfinite(country.initial_capital) || country.initial_capital <= 0.0) {
        throw ValidationError(join(prefix, "initial_capital"), "must be > 0");
    }
}

Trajectory simulate(const Country& country, const Schedule& schedule) {
    validate(country);
    validate(schedule);
    for (std::size_t i = 0; i < schedule.entries.size(); ++i) {
        validate_regime(country.params, schedule.entries[i].regime,
                        "entries[" + std::to_string(i) + "]");
    }

    Trajectory out;
    out.periods.reserve(static_cast<std::size_t>(schedule.horizon));
    double capital = country.initial_capital;
    double last_productivity = 0.0;
    for (int t = 0; t < schedule.horizon; ++t) {
        const RegimePoint& regime = schedule.regime_at(t);
        last_productivity = productivity(country.params, regime.military_burden);
        StepResult result;
        try {
            result = step(country.params, regime, EconomyState{capital});
        } catch (const AnnihilationError& e) {
            throw AnnihilationError(std::string(e.what()) + " (period " +
                                        std::to_string(t) + ")",
                                    t);
        }
        out.periods.push_back({t, regime.military_burden, regime.destruction_rate,
                               capital, last_productivity * capital,
                               result.civilian_investment, result.realized_growth});
        capital = result.next_capital;
    }
    out.terminal_capital = capital;
    out.terminal_output = last_productivity * capital;
    return out;
}

ComparisonReport peace_war_table(const std::vector<CountryScenario>& scenarios,
                                 int horizon) {
    if (horizon < 1) {
        throw ValidationError("horizon", "must be >= 1");
    }
    ComparisonReport report;
    report.horizon = horizon;
    report.countries.reserve(scenarios.size());
    for (const auto& scenario : scenarios) {
        double peace_growth = growth_rate(scenario.country.params, scenario.peace);
        double war_growth = growth_rate(scenario.country.params, scenario.war);

        Trajectory peace_path =
            simulate(scenario.country, constant_schedule(scenario.peace, horizon));
        Trajectory war_path =
            simulate(scenario.country, constant_schedule(scenario.war, horizon));

        CountryComparison row;
        row.country = scenario.country.name;
        row.peace_growth = peace_growth;
        row.war_growth = war_growth;
        row.terminal_ratio =
            std::pow((1.0 + war_growth) / (1.0 + peace_growth), horizon);
        row.output_loss.reserve(static_cast<std::size_t>(horizon));
        for (int t = 0; t < horizon; ++t) {
            row.output_loss.push_back(peace_path.periods[static_cast<std::size_t>(t)].output -
                                      war_path.periods[static_cast<std::size_t>(t)].output);
        }
        report.countries.push_back(std::move(row));
    }
    return report;
}

CounterfactualLoss counterfactual_loss(const Country& country, const Schedule& actual,
                                       const Schedule& counterfactual) {
    if (actual.horizon != counterfactual.horizon) {
        throw HorizonMismatchError(
            "counterfactual.horizon",
            "horizons differ: actual " + std::to_string(actual.horizon) +
                " vs counterfactual " + std::to_string(counterfactual.horizon));
    }
    Trajectory actual_path = simulate(country, actual);
    Trajectory counterfactual_path = simulate(country, counterfactual);

    CounterfactualLoss out;
    out.period_gap.reserve(actual_path.periods.size());
    for (std::size_t t = 0; t < actual_path.periods.size(); ++t) {
        double gap = counterfactual_path.periods[t].output - actual_path.periods[t].output;
        out.period_gap.push_back(gap);
        out.cumulative_gap += gap;
    }
    out.terminal_ratio = actual_path.terminal_capital / counterfactual_path.terminal_capital;
    return out;
}

} // namespace milgrowth
