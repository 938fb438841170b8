#include "config.hpp"

#include "milgrowth/presets.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace milgrowth::cli {

namespace {

using nlohmann::json;

double parse_double(const std::string& text, const std::string& field) {
    try {
        std::size_t used = 0;
        double value = std::stod(text, &used);
        if (used != text.size()) {
            throw std::invalid_argument("trailing characters");
        }
        return value;
    } catch (const std::exception&) {
        throw ValidationError(field, "'" + text + "' is not a number");
    }
}

int parse_int(const std::string& text, const std::string& field) {
    try {
        std::size_t used = 0;
        int value = std::stoi(text, &used);
        if (used != text.size()) {
            throw std::invalid_argument("trailing characters");
        }
        return value;
    } catch (const std::exception&) {
        throw ValidationError(field, "'" + text + "' is not an integer");
    }
}

void check_keys(const json& object, std::initializer_list<const char*> allowed,
                const std::string& path) {
    for (const auto& item : object.items()) {
        bool known = false;
        for (const char* key : allowed) {
            if (item.key() == key) {
                known = true;
                break;
            }
        }
        if (!known) {
            throw ValidationError(path + "." + item.key(), "unknown key");
        }
    }
}

const json& require_key(const json& object, const char* key, const std::string& path) {
    auto it = object.find(key);
    if (it == object.end()) {
        throw ValidationError(path + "." + key, "missing required key");
    }
    return *it;
}

double get_number(const json& object, const char* key, const std::string& path) {
    const json& value = require_key(object, key, path);
    if (!value.is_number()) {
        throw ValidationError(path + "." + key, "must be a number");
    }
    return value.get<double>();
}

double get_number_or(const json& object, const char* key, const std::string& path,
                     double fallback) {
    auto it = object.find(key);
    if (it == object.end()) {
        return fallback;
    }
    if (!it->is_number()) {
        throw ValidationError(path + "." + key, "must be a number");
    }
    return it->get<double>();
}

int get_integer(const json& object, const char* key, const std::string& path) {
    const json& value = require_key(object, key, path);
    if (!value.is_number_integer()) {
        throw ValidationError(path + "." + key, "must be an integer");
    }
    return value.get<int>();
}

void expect_object(const json& value, const std::string& path) {
    if (!value.is_object()) {
        throw ValidationError(path, "must be an object");
    }
}

std::string known_names(const std::map<std::string, Country>& items) {
    std::string out;
    for (const auto& [name, unused] : items) {
        if (!out.empty()) out += ", ";
        out += name;
    }
    return out;
}

std::string known_names(const std::map<std::string, RegimePoint>& items) {
    std::string out;
    for (const auto& [name, unused] : items) {
        if (!out.empty()) out += ", ";
        out += name;
    }
    return out;
}

} // namespace

Registry default_registry() {
    Registry registry;
    for (const auto& name : presets::country_names()) {
        registry.countries.emplace(name, *presets::find_country(name));
    }
    for (const auto& name : presets::regime_names()) {
        registry.regimes.emplace(name, *presets::find_regime(name));
    }
    return registry;
}

void apply_config_file(Registry& registry, const std::string& path) {
    std::ifstream input(path);
    if (!input) {
        throw ValidationError("config", "cannot open file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << input.rdbuf();

    json root;
    try {
        root = json::parse(buffer.str());
    } catch (const json::parse_error& e) {
        throw ValidationError("config", std::string("invalid JSON: ") + e.what());
    }
    expect_object(root, "config");
    check_keys(root, {"growth", "regimes", "schedules", "demand", "grid"}, "config");

    if (auto it = root.find("growth"); it != root.end()) {
        expect_object(*it, "config.growth");
        for (const auto& item : it->items()) {
            std::string path_here = "config.growth." + item.key();
            expect_object(item.value(), path_here);
            check_keys(item.value(), {"s", "delta", "a0", "phi", "chi", "k0"}, path_here);
            Country country;
            country.name = item.key();
            country.params.savings_rate = get_number(item.value(), "s", path_here);
            country.params.depreciation = get_number(item.value(), "delta", path_here);
            country.params.base_productivity = get_number(item.value(), "a0", path_here);
            country.params.innovation_gain = get_number(item.value(), "phi", path_here);
            country.params.distortion_drag = get_number(item.value(), "chi", path_here);
            country.initial_capital = get_number_or(item.value(), "k0", path_here, 100.0);
            validate(country, path_here);
            registry.countries[item.key()] = country;
        }
    }

    if (auto it = root.find("regimes"); it != root.end()) {
        expect_object(*it, "config.regimes");
        for (const auto& item : it->items()) {
            std::string path_here = "config.regimes." + item.key();
            expect_object(item.value(), path_here);
            check_keys(item.value(), {"m", "d"}, path_here);
            RegimePoint regime;
            regime.military_burden = get_number(item.value(), "m", path_here);
            regime.destruction_rate = get_number_or(item.value(), "d", path_here, 0.0);
            validate(regime, path_here);
            registry.regimes[item.key()] = regime;
        }
    }

    if (auto it = root.find("schedules"); it != root.end()) {
        expect_object(*it, "config.schedules");
        for (const auto& item : it->items()) {
            std::string path_here = "config.schedules." + item.key();
            expect_object(item.value(), path_here);
            check_keys(item.value(), {"horizon", "entries"}, path_here);
            Schedule schedule;
            schedule.horizon = get_integer(item.value(), "horizon", path_here);
            const json& entries = require_key(item.value(), "entries", path_here);
            if (!entries.is_array()) {
                throw ValidationError(path_here + ".entries", "must be an array");
            }
            for (std::size_t i = 0; i < entries.size(); ++i) {
                std::string entry_path = path_here + ".entries[" + std::to_string(i) + "]";
                expect_object(entries[i], entry_path);
                check_keys(entries[i], {"start", "regime", "m", "d"}, entry_path);
                Schedule::Entry entry;
                entry.start = get_integer(entries[i], "start", entry_path);
                if (auto regime_it = entries[i].find("regime");
                    regime_it != entries[i].end()) {
                    if (!regime_it->is_string()) {
                        throw ValidationError(entry_path + ".regime", "must be a string");
                    }
                    entry.regime =
                        require_regime(registry, regime_it->get<std::string>());
                } else {
                    entry.regime.military_burden = get_number(entries[i], "m", entry_path);
                    entry.regime.destruction_rate =
                        get_number_or(entries[i], "d", entry_path, 0.0);
                }
                schedule.entries.push_back(entry);
            }
            validate(schedule, path_here);
            registry.schedules[item.key()] = schedule;
        }
    }

    if (auto it = root.find("demand"); it != root.end()) {
        expect_object(*it, "config.demand");
        check_keys(*it, {"c0", "c1", "tau", "i0", "i1", "i2", "r", "g_c", "g_m"},
                   "config.demand");
        DemandParams demand;
        demand.autonomous_consumption = get_number(*it, "c0", "config.demand");
        demand.consumption_propensity = get_number(*it, "c1", "config.demand");
        demand.tax_rate = get_number(*it, "tau", "config.demand");
        demand.autonomous_investment = get_number(*it, "i0", "config.demand");
        demand.investment_accelerator = get_number(*it, "i1", "config.demand");
        demand.interest_sensitivity = get_number(*it, "i2", "config.demand");
        demand.interest_rate = get_number(*it, "r", "config.demand");
        demand.civilian_spending = get_number(*it, "g_c", "config.demand");
        demand.military_spending = get_number(*it, "g_m", "config.demand");
        GoodsMarket check(demand); // validates ranges and stability
        registry.demand = demand;
    }

    if (auto it = root.find("grid"); it != root.end()) {
        expect_object(*it, "config.grid");
        check_keys(*it, {"m_min", "m_max", "steps"}, "config.grid");
        SweepGrid grid;
        grid.m_min = get_number(*it, "m_min", "config.grid");
        grid.m_max = get_number(*it, "m_max", "config.grid");
        grid.steps = get_integer(*it, "steps", "config.grid");
        if (grid.m_min < 0.0 || grid.m_min >= grid.m_max || grid.m_max >= 1.0) {
            throw ValidationError("config.grid", "requires 0 <= m_min < m_max < 1");
        }
        if (grid.steps < 2) {
            throw ValidationError("config.grid.steps", "must be >= 2");
        }
        registry.grid = grid;
    }
}

const Country& require_country(const Registry& registry, const std::string& name) {
    auto it = registry.countries.find(name);
    if (it == registry.countries.end()) {
        throw ValidationError("preset", "unknown growth preset '" + name +
                                            "' (known: " +
                                            known_names(registry.countries) + ")");
    }
    return it->second;
}

const RegimePoint& require_regime(const Registry& registry, const std::string& name) {
    auto it = registry.regimes.find(name);
    if (it == registry.regimes.end()) {
        throw ValidationError("regime", "unknown regime '" + name + "' (known: " +
                                            known_names(registry.regimes) + ")");
    }
    return it->second;
}

Schedule resolve_schedule(const Registry& registry, const std::string& expression,
                          std::optional<int> horizon_flag) {
    if (auto it = registry.schedules.find(expression); it != registry.schedules.end()) {
        Schedule schedule = it->second;
        if (horizon_flag) {
            schedule.horizon = *horizon_flag;
        }
        return schedule;
    }
    if (auto it = registry.regimes.find(expression); it != registry.regimes.end()) {
        return constant_schedule(it->second, horizon_flag.value_or(10));
    }
    if (expression.find('=') == std::string::npos) {
        throw ValidationError("schedule", "unknown schedule or regime '" + expression +
                                              "' (known regimes: " +
                                              known_names(registry.regimes) + ")");
    }

    Schedule schedule;
    schedule.horizon = horizon_flag.value_or(10);
    for (const std::string& token : split_list(expression, "schedule")) {
        auto eq = token.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == token.size()) {
            throw ValidationError("schedule",
                                  "entry '" + token + "' is not START=REGIME");
        }
        Schedule::Entry entry;
        entry.start = parse_int(token.substr(0, eq), "schedule.start");
        std::string regime_token = token.substr(eq + 1);
        if (auto it = registry.regimes.find(regime_token); it != registry.regimes.end()) {
            entry.regime = it->second;
        } else if (auto slash = regime_token.find('/'); slash != std::string::npos) {
            entry.regime.military_burden =
                parse_double(regime_token.substr(0, slash), "schedule.m");
            entry.regime.destruction_rate =
                parse_double(regime_token.substr(slash + 1), "schedule.d");
        } else {
            entry.regime.military_burden = parse_double(regime_token, "schedule.m");
            entry.regime.destruction_rate = 0.0;
        }
        schedule.entries.push_back(entry);
    }
    return schedule;
}

std::vector<std::string> split_list(const std::string& value, const char* field) {
    std::vector<std::string> out;
    std::string current;
    auto push = [&]() {
        std::size_t begin = current.find_first_not_of(" \t");
        std::size_t end = current.find_last_not_of(" \t");
        if (begin == std::string::npos) {
            throw ValidationError(field, "list contains an empty item");
        }
        out.push_back(current.substr(begin, end - begin + 1));
        current.clear();
    };
    for (char c : value) {
        if (c == ',') {
            push();
        } else {
            current += c;
        }
    }
    push();
    return out;
}

} // namespace milgrowth::cli
