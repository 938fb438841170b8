#pragma once

#include "milgrowth/analysis.hpp"
#include "milgrowth/demand.hpp"
#include "milgrowth/scenario.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace milgrowth::cli {

/// Everything a command can reference by name: built-in presets plus whatever
/// a config file defines or overrides.
struct Registry {
    std::map<std::string, Country> countries;
    std::map<std::string, RegimePoint> regimes;
    std::map<std::string, Schedule> schedules;
    std::optional<DemandParams> demand;
    std::optional<SweepGrid> grid;
};

/// Built-in countries (baseline, us, iran) and regimes (us-peace, us-war,
/// iran-peace, iran-war).
Registry default_registry();

/// Load a JSON config file and overlay it onto the registry. Every block is
/// validated on load (schema keys, ranges, referenced regimes), so commands
/// never start computing from a bad config.
void apply_config_file(Registry& registry, const std::string& path);

/// Lookups that throw ValidationError naming the known alternatives.
const Country& require_country(const Registry& registry, const std::string& name);
const RegimePoint& require_regime(const Registry& registry, const std::string& name);

/// Resolve a schedule expression: a config schedule name, a regime name
/// (constant schedule), or a comma list of "START=REGIME" entries where
/// REGIME is a regime name or an inline "M/D" pair ("0=us-peace,3=0.07/0.01").
/// `horizon_flag` is the --horizon value when explicitly given; it overrides
/// a named schedule's own horizon and defaults to 10 otherwise.
Schedule resolve_schedule(const Registry& registry, const std::string& expression,
                          std::optional<int> horizon_flag);

/// Split a comma-separated list, trimming blanks; rejects empty items.
std::vector<std::string> split_list(const std::string& value, const char* field);

} // namespace milgrowth::cli
