#include "commands.hpp"

#include "config.hpp"

#include "milgrowth/analysis.hpp"
#include "milgrowth/calibration.hpp"
#include "milgrowth/csv.hpp"
#include "milgrowth/demand.hpp"
#include "milgrowth/presets.hpp"
#include "milgrowth/scenario.hpp"
#include "milgrowth/svg_plot.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>

namespace milgrowth::cli {

namespace {

using nlohmann::ordered_json;

constexpr const char* kVersion = "milgrowth 1.0.0";

struct CommonOpts {
    std::string format = "text";
    std::string out_path;
    std::string config_path;
};

void add_common(CLI::App* cmd, CommonOpts& common) {
    cmd->add_option("--format", common.format, "Output format: text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", common.out_path, "Write the CSV result to this file");
    cmd->add_option("--config", common.config_path,
                    "JSON config file with presets and parameter blocks");
}

/// Everything a command wants emitted; files are written only after the whole
/// computation succeeded.
struct Emission {
    std::string stdout_text;
    std::vector<std::pair<std::string, std::string>> files;
};

Emission finish(const CommonOpts& common, std::string text, const CsvTable& csv,
                const ordered_json& json_doc,
                std::vector<std::pair<std::string, std::string>> extra_files = {}) {
    Emission emission;
    std::string csv_text = csv.str();
    if (common.format == "csv") {
        emission.stdout_text = csv_text;
    } else if (common.format == "json") {
        emission.stdout_text = json_doc.dump(2) + "\n";
    } else {
        emission.stdout_text = std::move(text);
    }
    if (!common.out_path.empty()) {
        emission.files.emplace_back(common.out_path, csv_text);
    }
    for (auto& file : extra_files) {
        emission.files.push_back(std::move(file));
    }
    return emission;
}

void write_files(const Emission& emission) {
    for (const auto& [path, bytes] : emission.files) {
        std::ofstream file(path, std::ios::binary);
        if (!file) {
            throw ComputationError("cannot open output file '" + path + "'");
        }
        file << bytes;
        if (!file) {
            throw ComputationError("cannot write output file '" + path + "'");
        }
    }
}

std::string percent(double fraction) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.2f%%", fraction * 100.0);
    return buffer;
}

std::string display_label(const std::string& preset) {
    if (preset == "us") return "United States";
    if (preset == "iran") return "Iran";
    if (preset == "baseline") return "Baseline";
    return preset;
}

const char* regime_label(Regime regime) {
    switch (regime) {
        case Regime::BelowOptimum: return "below-optimum";
        case Regime::NearOptimum: return "near-optimum";
        case Regime::PermanentWarEconomy: return "permanent-war-economy";
    }
    return "unknown";
}

/// Explicit structural-parameter flags shared by several subcommands.
struct GrowthParamsOpts {
    double savings_rate = 0.0;
    double depreciation = 0.0;
    double base_productivity = 0.0;
    double innovation_gain = 0.0;
    double distortion_drag = 0.0;
    CLI::Option* savings_opt = nullptr;
    CLI::Option* depreciation_opt = nullptr;
    CLI::Option* productivity_opt = nullptr;
    CLI::Option* innovation_opt = nullptr;
    CLI::Option* distortion_opt = nullptr;

    void add_to(CLI::App* cmd) {
        savings_opt = cmd->add_option("--s", savings_rate, "Savings rate s");
        depreciation_opt = cmd->add_option("--delta", depreciation, "Depreciation delta");
        productivity_opt = cmd->add_option("--a0", base_productivity, "Base productivity A0");
        innovation_opt = cmd->add_option("--phi", innovation_gain, "Innovation gain phi");
        distortion_opt = cmd->add_option("--chi", distortion_drag, "Distortion drag chi");
    }

    bool any_set() const {
        return savings_opt->count() || depreciation_opt->count() ||
               productivity_opt->count() || innovation_opt->count() ||
               distortion_opt->count();
    }

    bool all_set() const {
        return savings_opt->count() && depreciation_opt->count() &&
               productivity_opt->count() && innovation_opt->count() &&
               distortion_opt->count();
    }

    void apply_overrides(GrowthParams& params) const {
        if (savings_opt->count()) params.savings_rate = savings_rate;
        if (depreciation_opt->count()) params.depreciation = depreciation;
        if (productivity_opt->count()) params.base_productivity = base_productivity;
        if (innovation_opt->count()) params.innovation_gain = innovation_gain;
        if (distortion_opt->count()) params.distortion_drag = distortion_drag;
    }

    /// Preset parameters with flag overrides, or fully explicit parameters
    /// when no preset was named.
    GrowthParams resolve(const Registry& registry, const std::string& preset) const {
        GrowthParams params;
        if (!preset.empty()) {
            params = require_country(registry, preset).params;
        } else if (!all_set()) {
            throw ValidationError(
                "params", "provide --preset or all of --s --delta --a0 --phi --chi");
        }
        apply_overrides(params);
        validate(params, "params");
        return params;
    }
};

// ---------------------------------------------------------------------------
// demand

struct DemandOpts {
    CommonOpts common;
    DemandParams values{10.0, 0.8, 0.25, 5.0, 0.1, 20.0, 0.05, 10.0, 5.0};
    CLI::Option* c0 = nullptr;
    CLI::Option* c1 = nullptr;
    CLI::Option* tau = nullptr;
    CLI::Option* i0 = nullptr;
    CLI::Option* i1 = nullptr;
    CLI::Option* i2 = nullptr;
    CLI::Option* r = nullptr;
    CLI::Option* g_c = nullptr;
    CLI::Option* g_m = nullptr;
};

void add_demand(CLI::App& app, DemandOpts& opts) {
    CLI::App* cmd = app.add_subcommand(
        "demand", "Goods-market equilibrium output and multiplier");
    add_common(cmd, opts.common);
    opts.c0 = cmd->add_option("--c0", opts.values.autonomous_consumption,
                              "Autonomous consumption")->capture_default_str();
    opts.c1 = cmd->add_option("--c1", opts.values.consumption_propensity,
                              "Marginal propensity to consume")->capture_default_str();
    opts.tau = cmd->add_option("--tau", opts.values.tax_rate, "Tax rate")
                   ->capture_default_str();
    opts.i0 = cmd->add_option("--i0", opts.values.autonomous_investment,
                              "Autonomous investment")->capture_default_str();
    opts.i1 = cmd->add_option("--i1", opts.values.investment_accelerator,
                              "Investment response to output")->capture_default_str();
    opts.i2 = cmd->add_option("--i2", opts.values.interest_sensitivity,
                              "Investment response to the interest rate")
                  ->capture_default_str();
    opts.r = cmd->add_option("--r", opts.values.interest_rate, "Interest rate")
                 ->capture_default_str();
    opts.g_c = cmd->add_option("--gc", opts.values.civilian_spending,
                               "Civilian government spending")->capture_default_str();
    opts.g_m = cmd->add_option("--gm", opts.values.military_spending,
                               "Military government spending")->capture_default_str();
}

Emission run_demand(const Registry& registry, const DemandOpts& opts) {
    DemandParams params = registry.demand ? *registry.demand : opts.values;
    if (opts.c0->count()) params.autonomous_consumption = opts.values.autonomous_consumption;
    if (opts.c1->count()) params.consumption_propensity = opts.values.consumption_propensity;
    if (opts.tau->count()) params.tax_rate = opts.values.tax_rate;
    if (opts.i0->count()) params.autonomous_investment = opts.values.autonomous_investment;
    if (opts.i1->count()) params.investment_accelerator = opts.values.investment_accelerator;
    if (opts.i2->count()) params.interest_sensitivity = opts.values.interest_sensitivity;
    if (opts.r->count()) params.interest_rate = opts.values.interest_rate;
    if (opts.g_c->count()) params.civilian_spending = opts.values.civilian_spending;
    if (opts.g_m->count()) params.military_spending = opts.values.military_spending;

    GoodsMarket market(params);
    DemandSolution solution = market.equilibrium();

    std::ostringstream text;
    text << "goods-market equilibrium\n";
    text << "  output                " << format_number(solution.output) << "\n";
    text << "  multiplier            " << format_number(solution.multiplier) << "\n";
    text << "  autonomous component  " << format_number(solution.autonomous_component)
         << "\n";

    CsvTable csv({"output", "multiplier", "autonomous"});
    csv.add_row({format_number(solution.output), format_number(solution.multiplier),
                 format_number(solution.autonomous_component)});

    ordered_json json_doc;
    json_doc["output"] = solution.output;
    json_doc["multiplier"] = solution.multiplier;
    json_doc["autonomous_component"] = solution.autonomous_component;

    return finish(opts.common, text.str(), csv, json_doc);
}

// ---------------------------------------------------------------------------
// growth

struct GrowthOpts {
    CommonOpts common;
    std::string preset;
    GrowthParamsOpts params;
    double military_burden = 0.0;
    double destruction_rate = 0.0;
};

void add_growth(CLI::App& app, GrowthOpts& opts) {
    CLI::App* cmd = app.add_subcommand(
        "growth", "Long-run growth rate under a burden and destruction rate");
    add_common(cmd, opts.common);
    cmd->add_option("--preset", opts.preset, "Growth preset (baseline, us, iran, ...)");
    opts.params.add_to(cmd);
    cmd->add_option("--m", opts.military_burden, "Military burden")->required();
    cmd->add_option("--d", opts.destruction_rate, "Destruction rate")
        ->capture_default_str();
}

Emission run_growth(const Registry& registry, const GrowthOpts& opts) {
    GrowthParams params = opts.params.resolve(registry, opts.preset);
    RegimePoint regime{opts.military_burden, opts.destruction_rate};
    double growth = growth_rate(params, regime);

    std::ostringstream text;
    text << "growth rate\n";
    text << "  m  " << format_number(regime.military_burden) << "\n";
    text << "  d  " << format_number(regime.destruction_rate) << "\n";
    text << "  g  " << format_number(growth) << " (" << percent(growth)
         << " per period)\n";

    CsvTable csv({"m", "d", "g"});
    csv.add_row({format_number(regime.military_burden),
                 format_number(regime.destruction_rate), format_number(growth)});

    ordered_json json_doc;
    json_doc["m"] = regime.military_burden;
    json_doc["d"] = regime.destruction_rate;
    json_doc["g"] = growth;

    return finish(opts.common, text.str(), csv, json_doc);
}

// ---------------------------------------------------------------------------
// sweep

struct SweepOpts {
    CommonOpts common;
    std::string presets = "baseline";
    GrowthParamsOpts params;
    double m_min = 0.0;
    double m_max = 0.08;
    int steps = 401;
    double destruction_rate = 0.0;
    std::string plot_path;
    std::string marker_regimes;
    std::vector<double> marker_values;
    bool data_only = false;
    CLI::Option* m_min_opt = nullptr;
    CLI::Option* m_max_opt = nullptr;
    CLI::Option* steps_opt = nullptr;
};

void add_sweep(CLI::App& app, SweepOpts& opts) {
    CLI::App* cmd = app.add_subcommand(
        "sweep", "Growth rate across a grid of military burdens");
    add_common(cmd, opts.common);
    cmd->add_option("--preset", opts.presets,
                    "Growth preset or comma list for a multi-series sweep")
        ->capture_default_str();
    opts.params.add_to(cmd);
    opts.m_min_opt =
        cmd->add_option("--m-min", opts.m_min, "Grid start")->capture_default_str();
    opts.m_max_opt =
        cmd->add_option("--m-max", opts.m_max, "Grid end")->capture_default_str();
    opts.steps_opt = cmd->add_option("--steps", opts.steps, "Number of grid points")
                         ->check(CLI::Range(2, 100000000))
                         ->capture_default_str();
    cmd->add_option("--d", opts.destruction_rate, "Destruction rate")
        ->capture_default_str();
    cmd->add_option("--plot", opts.plot_path, "Write an SVG figure to this file");
    cmd->add_option("--markers", opts.marker_regimes,
                    "Comma list of regime presets to mark as vertical lines");
    cmd->add_option("--mark", opts.marker_values,
                    "Vertical marker at a burden value (repeatable)");
    cmd->add_flag("--data-only", opts.data_only,
                  "Emit only the plot's backing CSV, skip the SVG file");
}

Emission run_sweep(const Registry& registry, const SweepOpts& opts) {
    SweepGrid grid = registry.grid.value_or(SweepGrid{0.0, 0.08, 401});
    if (opts.m_min_opt->count()) grid.m_min = opts.m_min;
    if (opts.m_max_opt->count()) grid.m_max = opts.m_max;
    if (opts.steps_opt->count()) grid.steps = opts.steps;

    std::vector<std::string> names = split_list(opts.presets, "preset");
    if (names.size() > 1 && opts.params.any_set()) {
        throw ValidationError("params",
                              "explicit parameter flags need a single preset");
    }

    std::vector<PlotSeries> series;
    series.reserve(names.size());
    for (const auto& name : names) {
        GrowthParams params = opts.params.resolve(registry, name);
        series.push_back(
            {display_label(name), sweep(params, grid, opts.destruction_rate)});
    }

    std::vector<PlotMarker> markers;
    if (!opts.marker_regimes.empty()) {
        for (const auto& name : split_list(opts.marker_regimes, "markers")) {
            const RegimePoint& regime = require_regime(registry, name);
            MarkerStyle style = name.find("war") != std::string::npos
                                    ? MarkerStyle::DashDot
                                    : MarkerStyle::Dotted;
            markers.push_back({name + " (m=" + format_number(regime.military_burden) + ")",
                               regime.military_burden, style});
        }
    }
    for (double value : opts.marker_values) {
        markers.push_back({"m=" + format_number(value), value, MarkerStyle::Dashed});
    }

    // CSV: canonical m,g for one series, one g column per preset otherwise.
    std::vector<std::string> header{"m"};
    if (names.size() == 1) {
        header.push_back("g");
    } else {
        for (const auto& name : names) header.push_back("g_" + name);
    }
    CsvTable csv(header);
    for (int i = 0; i < grid.steps; ++i) {
        std::vector<std::string> row;
        row.reserve(names.size() + 1);
        row.push_back(format_number(series[0].points[static_cast<std::size_t>(i)].military_burden));
        for (const auto& s : series) {
            row.push_back(format_number(s.points[static_cast<std::size_t>(i)].growth));
        }
        csv.add_row(std::move(row));
    }

    ordered_json json_doc;
    json_doc["m_min"] = grid.m_min;
    json_doc["m_max"] = grid.m_max;
    json_doc["steps"] = grid.steps;
    json_doc["d"] = opts.destruction_rate;
    ordered_json m_values = ordered_json::array();
    for (const auto& point : series[0].points) m_values.push_back(point.military_burden);
    json_doc["m"] = std::move(m_values);
    ordered_json series_json = ordered_json::array();
    for (std::size_t i = 0; i < series.size(); ++i) {
        ordered_json one;
        one["name"] = names[i];
        ordered_json growth_values = ordered_json::array();
        for (const auto& point : series[i].points) growth_values.push_back(point.growth);
        one["g"] = std::move(growth_values);
        series_json.push_back(std::move(one));
    }
    json_doc["series"] = std::move(series_json);

    std::ostringstream text;
    text << "burden sweep [" << format_number(grid.m_min) << ", "
         << format_number(grid.m_max) << "], " << grid.steps << " points, d = "
         << format_number(opts.destruction_rate) << "\n";
    for (std::size_t i = 0; i < series.size(); ++i) {
        const auto& points = series[i].points;
        std::size_t best = 0;
        for (std::size_t j = 1; j < points.size(); ++j) {
            if (points[j].growth > points[best].growth) best = j;
        }
        text << "  " << names[i] << ": g(" << format_number(grid.m_min) << ") = "
             << format_number(points.front().growth) << ", peak g = "
             << format_number(points[best].growth) << " at m = "
             << format_number(points[best].military_burden) << ", g("
             << format_number(grid.m_max) << ") = "
             << format_number(points.back().growth) << "\n";
    }

    std::vector<std::pair<std::string, std::string>> extra_files;
    if (!opts.plot_path.empty() && !opts.data_only) {
        extra_files.emplace_back(opts.plot_path, render_plot_svg(series, markers));
    }
    return finish(opts.common, text.str(), csv, json_doc, std::move(extra_files));
}

// ---------------------------------------------------------------------------
// optimize

struct OptimizeOpts {
    CommonOpts common;
    std::string preset;
    GrowthParamsOpts params;
    double destruction_rate = 0.0;
    bool verify = false;
    double classify_burden = 0.0;
    double tolerance = 1e-4;
    CLI::Option* classify_opt = nullptr;
};

void add_optimize(CLI::App& app, OptimizeOpts& opts) {
    CLI::App* cmd = app.add_subcommand(
        "optimize", "Growth-maximizing military burden (closed form)");
    add_common(cmd, opts.common);
    cmd->add_option("--preset", opts.preset, "Growth preset");
    opts.params.add_to(cmd);
    cmd->add_option("--d", opts.destruction_rate, "Destruction rate")
        ->capture_default_str();
    cmd->add_flag("--verify", opts.verify,
                  "Re-derive the optimum with a 1e-5-step grid search");
    opts.classify_opt = cmd->add_option(
        "--classify", opts.classify_burden,
        "Also classify this burden against the optimum");
    cmd->add_option("--tol", opts.tolerance,
                    "Half-width of the near-optimum classification band")
        ->capture_default_str();
}

double grid_argmax(const GrowthParams& params, double destruction_rate, double step) {
    double best_m = 0.0;
    double best_g = -std::numeric_limits<double>::infinity();
    for (long i = 0;; ++i) {
        double m = static_cast<double>(i) * step;
        if (m >= 1.0) break;
        double g = growth_rate(params, RegimePoint{m, destruction_rate});
        if (g > best_g) {
            best_g = g;
            best_m = m;
        }
    }
    return best_m;
}

Emission run_optimize(const Registry& registry, const OptimizeOpts& opts) {
    GrowthParams params = opts.params.resolve(registry, opts.preset);
    OptimumReport report = optimal_burden(params, opts.destruction_rate);

    std::optional<double> grid_m;
    if (opts.verify) {
        grid_m = grid_argmax(params, opts.destruction_rate, 1e-5);
    }
    std::optional<Regime> classified;
    if (opts.classify_opt->count()) {
        classified = classify_regime(params, opts.classify_burden, opts.tolerance);
    }

    std::ostringstream text;
    text << "growth-maximizing burden\n";
    text << "  m*           " << format_number(report.m_star) << "\n";
    text << "  g*           " << format_number(report.g_star) << " ("
         << percent(report.g_star) << " per period)\n";
    text << "  interior     " << (report.interior ? "yes" : "no") << "\n";
    text << "  second root  " << format_number(report.second_root) << "\n";
    if (grid_m) {
        text << "  grid argmax  " << format_number(*grid_m) << " (step 1e-05)\n";
    }
    if (classified) {
        text << "  m = " << format_number(opts.classify_burden) << " is "
             << regime_label(*classified) << "\n";
    }

    std::vector<std::string> header{"m_star", "g_star", "interior", "second_root"};
    if (grid_m) header.push_back("grid_m_star");
    if (classified) {
        header.push_back("classified_m");
        header.push_back("regime");
    }
    CsvTable csv(header);
    std::vector<std::string> row{format_number(report.m_star),
                                 format_number(report.g_star),
                                 report.interior ? "true" : "false",
                                 format_number(report.second_root)};
    if (grid_m) row.push_back(format_number(*grid_m));
    if (classified) {
        row.push_back(format_number(opts.classify_burden));
        row.push_back(regime_label(*classified));
    }
    csv.add_row(std::move(row));

    ordered_json json_doc;
    json_doc["m_star"] = report.m_star;
    json_doc["g_star"] = report.g_star;
    json_doc["interior"] = report.interior;
    json_doc["second_root"] = report.second_root;
    if (grid_m) json_doc["grid_m_star"] = *grid_m;
    if (classified) {
        json_doc["classified_m"] = opts.classify_burden;
        json_doc["regime"] = regime_label(*classified);
    }

    return finish(opts.common, text.str(), csv, json_doc);
}

// ---------------------------------------------------------------------------
// statics

struct StaticsOpts {
    CommonOpts common;
    std::string preset;
    GrowthParamsOpts params;
    double military_burden = 0.0;
    double destruction_rate = 0.0;
};

void add_statics(CLI::App& app, StaticsOpts& opts) {
    CLI::App* cmd = app.add_subcommand(
        "statics", "Partial derivatives of the growth rate at a point");
    add_common(cmd, opts.common);
    cmd->add_option("--preset", opts.preset, "Growth preset");
    opts.params.add_to(cmd);
    cmd->add_option("--m", opts.military_burden, "Military burden")->required();
    cmd->add_option("--d", opts.destruction_rate, "Destruction rate")
        ->capture_default_str();
}

Emission run_statics(const Registry& registry, const StaticsOpts& opts) {
    GrowthParams params = opts.params.resolve(registry, opts.preset);
    RegimePoint regime{opts.military_burden, opts.destruction_rate};
    GrowthPartials partials = comparative_statics(params, regime);

    std::ostringstream text;
    text << "comparative statics at m = " << format_number(regime.military_burden)
         << ", d = " << format_number(regime.destruction_rate) << "\n";
    text << "  dg/ds      " << format_number(partials.wrt_savings_rate) << "\n";
    text << "  dg/ddelta  " << format_number(partials.wrt_depreciation) << "\n";
    text << "  dg/da0     " << format_number(partials.wrt_base_productivity) << "\n";
    text << "  dg/dphi    " << format_number(partials.wrt_innovation_gain) << "\n";
    text << "  dg/dchi    " << format_number(partials.wrt_distortion_drag) << "\n";
    text << "  dg/dm      " << format_number(partials.wrt_military_burden) << "\n";
    text << "  dg/dd      " << format_number(partials.wrt_destruction_rate) << "\n";

    CsvTable csv({"dg_ds", "dg_ddelta", "dg_da0", "dg_dphi", "dg_dchi", "dg_dm", "dg_dd"});
    csv.add_row({format_number(partials.wrt_savings_rate),
                 format_number(partials.wrt_depreciation),
                 format_number(partials.wrt_base_productivity),
                 format_number(partials.wrt_innovation_gain),
                 format_number(partials.wrt_distortion_drag),
                 format_number(partials.wrt_military_burden),
                 format_number(partials.wrt_destruction_rate)});

    ordered_json json_doc;
    json_doc["m"] = regime.military_burden;
    json_doc["d"] = regime.destruction_rate;
    json_doc["dg_ds"] = partials.wrt_savings_rate;
    json_doc["dg_ddelta"] = partials.wrt_depreciation;
    json_doc["dg_da0"] = partials.wrt_base_productivity;
    json_doc["dg_dphi"] = partials.wrt_innovation_gain;
    json_doc["dg_dchi"] = partials.wrt_distortion_drag;
    json_doc["dg_dm"] = partials.wrt_military_burden;
    json_doc["dg_dd"] = partials.wrt_destruction_rate;

    return finish(opts.common, text.str(), csv, json_doc);
}

// ---------------------------------------------------------------------------
// scenario

struct ScenarioOpts {
    CommonOpts common;
    std::string presets = "us,iran";
    bool table3 = false;
    std::string schedule_expr;
    std::string counterfactual_expr;
    int horizon = 10;
    double initial_capital = 0.0;
    CLI::Option* horizon_opt = nullptr;
    CLI::Option* capital_opt = nullptr;
};

void add_scenario(CLI::App& app, ScenarioOpts& opts) {
    CLI::App* cmd = app.add_subcommand(
        "scenario", "Peace/war comparisons and trajectory simulation");
    add_common(cmd, opts.common);
    cmd->add_option("--preset", opts.presets, "Country preset or comma list")
        ->capture_default_str();
    cmd->add_flag("--table3", opts.table3,
                  "Peace-vs-war growth and decade ratio per country");
    cmd->add_option("--schedule", opts.schedule_expr,
                    "Regime schedule: a regime name, a config schedule name, or "
                    "START=REGIME pairs ('0=us-peace,3=us-war')");
    cmd->add_option("--counterfactual", opts.counterfactual_expr,
                    "Schedule to difference the --schedule run against");
    opts.horizon_opt = cmd->add_option("--horizon", opts.horizon, "Number of periods")
                           ->check(CLI::Range(1, 100000000))
                           ->capture_default_str();
    opts.capital_opt =
        cmd->add_option("--k0", opts.initial_capital, "Initial capital override");
}

Emission run_scenario_table(const Registry& registry, const ScenarioOpts& opts) {
    std::optional<int> horizon_flag;
    if (opts.horizon_opt->count()) horizon_flag = opts.horizon;
    int horizon = horizon_flag.value_or(10);

    std::vector<CountryScenario> scenarios;
    for (const auto& name : split_list(opts.presets, "preset")) {
        CountryScenario scenario;
        scenario.country = require_country(registry, name);
        auto peace = registry.regimes.find(name + "-peace");
        auto war = registry.regimes.find(name + "-war");
        if (peace == registry.regimes.end() || war == registry.regimes.end()) {
            throw ValidationError("preset",
                                  "no regime pair '" + name + "-peace'/'" + name +
                                      "-war' for preset '" + name + "'");
        }
        scenario.peace = peace->second;
        scenario.war = war->second;
        scenarios.push_back(std::move(scenario));
    }
    ComparisonReport report = peace_war_table(scenarios, horizon);

    std::ostringstream text;
    text << "peace-war comparison, horizon " << report.horizon << " periods\n";
    text << "  country  peace_g        war_g          terminal_ratio\n";
    for (const auto& row : report.countries) {
        std::string name = row.country;
        name.resize(7, ' ');
        std::string peace_g = format_number(row.peace_growth);
        peace_g.resize(13, ' ');
        std::string war_g = format_number(row.war_growth);
        war_g.resize(13, ' ');
        text << "  " << name << "  " << peace_g << "  " << war_g << "  "
             << format_number(row.terminal_ratio) << "\n";
    }
    for (const auto& row : report.countries) {
        text << "  " << row.country << ": war growth " << percent(row.war_growth)
             << " vs peace " << percent(row.peace_growth) << "; after "
             << report.horizon << " periods the war path holds "
             << percent(row.terminal_ratio) << " of the peace path's capital\n";
    }

    CsvTable csv({"country", "peace_g", "war_g", "terminal_ratio"});
    for (const auto& row : report.countries) {
        csv.add_row({row.country, format_number(row.peace_growth),
                     format_number(row.war_growth), format_number(row.terminal_ratio)});
    }

    ordered_json json_doc;
    json_doc["horizon"] = report.horizon;
    ordered_json rows = ordered_json::array();
    for (const auto& row : report.countries) {
        ordered_json one;
        one["country"] = row.country;
        one["peace_g"] = row.peace_growth;
        one["war_g"] = row.war_growth;
        one["terminal_ratio"] = row.terminal_ratio;
        one["output_loss"] = row.output_loss;
        rows.push_back(std::move(one));
    }
    json_doc["countries"] = std::move(rows);

    return finish(opts.common, text.str(), csv, json_doc);
}

Emission run_scenario_trajectory(const Registry& registry, const ScenarioOpts& opts) {
    std::vector<std::string> names = split_list(opts.presets, "preset");
    if (names.size() != 1) {
        throw ValidationError("preset", "trajectory simulation takes exactly one preset");
    }
    Country country = require_country(registry, names[0]);
    if (opts.capital_opt->count()) country.initial_capital = opts.initial_capital;

    std::optional<int> horizon_flag;
    if (opts.horizon_opt->count()) horizon_flag = opts.horizon;
    Schedule schedule = resolve_schedule(registry, opts.schedule_expr, horizon_flag);

    if (!opts.counterfactual_expr.empty()) {
        Schedule counterfactual =
            resolve_schedule(registry, opts.counterfactual_expr, horizon_flag);
        if (!horizon_flag) {
            counterfactual.horizon = schedule.horizon;
        }
        CounterfactualLoss loss = counterfactual_loss(country, schedule, counterfactual);
        Trajectory actual = simulate(country, schedule);
        Trajectory alternative = simulate(country, counterfactual);

        std::ostringstream text;
        text << "counterfactual comparison for " << country.name << ", horizon "
             << schedule.horizon << " periods\n";
        text << "  cumulative output gap  " << format_number(loss.cumulative_gap) << "\n";
        text << "  terminal ratio         " << format_number(loss.terminal_ratio)
             << " (actual/counterfactual capital)\n";

        CsvTable csv({"period", "actual_output", "counterfactual_output", "gap"});
        for (std::size_t t = 0; t < loss.period_gap.size(); ++t) {
            csv.add_row({std::to_string(t), format_number(actual.periods[t].output),
                         format_number(alternative.periods[t].output),
                         format_number(loss.period_gap[t])});
        }

        ordered_json json_doc;
        json_doc["country"] = country.name;
        json_doc["horizon"] = schedule.horizon;
        json_doc["period_gap"] = loss.period_gap;
        json_doc["cumulative_gap"] = loss.cumulative_gap;
        json_doc["terminal_ratio"] = loss.terminal_ratio;

        return finish(opts.common, text.str(), csv, json_doc);
    }

    Trajectory trajectory = simulate(country, schedule);

    std::ostringstream text;
    text << "trajectory for " << country.name << ", horizon " << schedule.horizon
         << " periods, k0 = " << format_number(country.initial_capital) << "\n";
    text << "  period  m         d         capital       output        growth\n";
    for (const auto& point : trajectory.periods) {
        std::string period = std::to_string(point.period);
        period.resize(6, ' ');
        std::string m = format_number(point.military_burden);
        m.resize(8, ' ');
        std::string d = format_number(point.destruction_rate);
        d.resize(8, ' ');
        std::string capital = format_number(point.capital);
        capital.resize(12, ' ');
        std::string output = format_number(point.output);
        output.resize(12, ' ');
        text << "  " << period << "  " << m << "  " << d << "  " << capital << "  "
             << output << "  " << format_number(point.realized_growth) << "\n";
    }
    text << "  terminal capital " << format_number(trajectory.terminal_capital)
         << ", terminal output " << format_number(trajectory.terminal_output) << "\n";

    CsvTable csv({"period", "country", "m", "d", "capital", "output", "investment",
                  "growth"});
    for (const auto& point : trajectory.periods) {
        csv.add_row({std::to_string(point.period), country.name,
                     format_number(point.military_burden),
                     format_number(point.destruction_rate), format_number(point.capital),
                     format_number(point.output),
                     format_number(point.civilian_investment),
                     format_number(point.realized_growth)});
    }

    ordered_json json_doc;
    json_doc["country"] = country.name;
    json_doc["horizon"] = schedule.horizon;
    json_doc["k0"] = country.initial_capital;
    ordered_json periods = ordered_json::array();
    for (const auto& point : trajectory.periods) {
        ordered_json one;
        one["period"] = point.period;
        one["m"] = point.military_burden;
        one["d"] = point.destruction_rate;
        one["capital"] = point.capital;
        one["output"] = point.output;
        one["investment"] = point.civilian_investment;
        one["growth"] = point.realized_growth;
        periods.push_back(std::move(one));
    }
    json_doc["periods"] = std::move(periods);
    json_doc["terminal_capital"] = trajectory.terminal_capital;
    json_doc["terminal_output"] = trajectory.terminal_output;

    return finish(opts.common, text.str(), csv, json_doc);
}

Emission run_scenario(const Registry& registry, const ScenarioOpts& opts) {
    if (opts.table3 && !opts.schedule_expr.empty()) {
        throw ValidationError("scenario", "--table3 and --schedule are exclusive");
    }
    if (opts.table3) {
        return run_scenario_table(registry, opts);
    }
    if (opts.schedule_expr.empty()) {
        throw ValidationError("scenario", "choose --table3 or --schedule");
    }
    return run_scenario_trajectory(registry, opts);
}

// ---------------------------------------------------------------------------
// calibrate

struct CalibrateOpts {
    CommonOpts common;
    std::string preset;
    GrowthParamsOpts params;
    bool solve_a0 = false;
    bool fit = false;
    double target_growth = 0.0;
    double military_burden = 0.0;
    double destruction_rate = 0.0;
    std::vector<std::string> observations;
    CLI::Option* growth_opt = nullptr;
};

void add_calibrate(CLI::App& app, CalibrateOpts& opts) {
    CLI::App* cmd = app.add_subcommand(
        "calibrate", "Invert the growth equation for A0 or fit (phi, chi)");
    add_common(cmd, opts.common);
    cmd->add_option("--preset", opts.preset,
                    "Growth preset seeding the known parameters");
    opts.params.add_to(cmd);
    cmd->add_flag("--solve-a0", opts.solve_a0, "Solve for base productivity");
    cmd->add_flag("--fit-innovation", opts.fit, "Fit phi and chi to two observations");
    opts.growth_opt =
        cmd->add_option("--g", opts.target_growth, "Observed growth rate (--solve-a0)");
    cmd->add_option("--m", opts.military_burden, "Observed burden (--solve-a0)")
        ->capture_default_str();
    cmd->add_option("--d", opts.destruction_rate, "Observed destruction (--solve-a0)")
        ->capture_default_str();
    cmd->add_option("--obs", opts.observations,
                    "Observation 'm=...,g=...[,d=...]' (--fit-innovation, twice)");
}

GrowthObservation parse_observation(const std::string& text) {
    GrowthObservation obs;
    bool has_m = false;
    bool has_g = false;
    for (const auto& part : split_list(text, "obs")) {
        auto eq = part.find('=');
        if (eq == std::string::npos) {
            throw ValidationError("obs", "'" + part + "' is not KEY=VALUE");
        }
        std::string key = part.substr(0, eq);
        std::string value = part.substr(eq + 1);
        try {
            std::size_t used = 0;
            double number = std::stod(value, &used);
            if (used != value.size()) throw std::invalid_argument("trailing");
            if (key == "m") {
                obs.military_burden = number;
                has_m = true;
            } else if (key == "d") {
                obs.destruction_rate = number;
            } else if (key == "g") {
                obs.growth = number;
                has_g = true;
            } else {
                throw ValidationError("obs", "unknown key '" + key + "'");
            }
        } catch (const std::invalid_argument&) {
            throw ValidationError("obs", "'" + value + "' is not a number");
        } catch (const std::out_of_range&) {
            throw ValidationError("obs", "'" + value + "' is not a number");
        }
    }
    if (!has_m || !has_g) {
        throw ValidationError("obs", "observation needs at least m= and g=");
    }
    return obs;
}

Emission run_calibrate(const Registry& registry, const CalibrateOpts& opts) {
    if (opts.solve_a0 == opts.fit) {
        throw ValidationError("calibrate",
                              "choose exactly one of --solve-a0 or --fit-innovation");
    }

    // Seed known parameters from the preset, then apply explicit overrides.
    GrowthParams params;
    bool have_seed = false;
    if (!opts.preset.empty()) {
        params = require_country(registry, opts.preset).params;
        have_seed = true;
    }
    opts.params.apply_overrides(params);

    if (opts.solve_a0) {
        if (!have_seed && !(opts.params.savings_opt->count() &&
                            opts.params.depreciation_opt->count() &&
                            opts.params.innovation_opt->count() &&
                            opts.params.distortion_opt->count())) {
            throw ValidationError(
                "params", "provide --preset or all of --s --delta --phi --chi");
        }
        if (!opts.growth_opt->count()) {
            throw ValidationError("g", "--solve-a0 needs the observed growth --g");
        }
        GrowthObservation target{opts.military_burden, opts.destruction_rate,
                                 opts.target_growth};
        double a0 = solve_base_productivity(params.savings_rate, params.depreciation,
                                            params.innovation_gain,
                                            params.distortion_drag, target);

        std::ostringstream text;
        text << "implied base productivity\n";
        text << "  a0  " << format_number(a0) << "\n";

        CsvTable csv({"a0"});
        csv.add_row({format_number(a0)});

        ordered_json json_doc;
        json_doc["a0"] = a0;
        return finish(opts.common, text.str(), csv, json_doc);
    }

    if (!have_seed && !(opts.params.savings_opt->count() &&
                        opts.params.depreciation_opt->count() &&
                        opts.params.productivity_opt->count())) {
        throw ValidationError("params",
                              "provide --preset or all of --s --delta --a0");
    }
    if (opts.observations.size() != 2) {
        throw ValidationError("obs", "--fit-innovation needs exactly two --obs");
    }
    GrowthObservation first = parse_observation(opts.observations[0]);
    GrowthObservation second = parse_observation(opts.observations[1]);
    InnovationFit fit = fit_innovation(params.savings_rate, params.depreciation,
                                       params.base_productivity, first, second);

    std::ostringstream text;
    text << "fitted innovation curve\n";
    text << "  phi  " << format_number(fit.innovation_gain) << "\n";
    text << "  chi  " << format_number(fit.distortion_drag) << "\n";

    CsvTable csv({"phi", "chi"});
    csv.add_row({format_number(fit.innovation_gain), format_number(fit.distortion_drag)});

    ordered_json json_doc;
    json_doc["phi"] = fit.innovation_gain;
    json_doc["chi"] = fit.distortion_drag;
    return finish(opts.common, text.str(), csv, json_doc);
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Deterministic growth-under-militarization toolkit"};
    app.name("milgrowth");
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    DemandOpts demand_opts;
    GrowthOpts growth_opts;
    SweepOpts sweep_opts;
    OptimizeOpts optimize_opts;
    StaticsOpts statics_opts;
    ScenarioOpts scenario_opts;
    CalibrateOpts calibrate_opts;

    add_demand(app, demand_opts);
    add_growth(app, growth_opts);
    add_sweep(app, sweep_opts);
    add_optimize(app, optimize_opts);
    add_statics(app, statics_opts);
    add_scenario(app, scenario_opts);
    add_calibrate(app, calibrate_opts);

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("milgrowth");
    for (const auto& arg : args) argv.push_back(arg.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        auto parsed = app.get_subcommands();
        out << (parsed.empty() ? app.help() : parsed.front()->help());
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: validation: cli: " << e.what() << "\n";
        return 1;
    }

    try {
        const CommonOpts* common = nullptr;
        if (app.got_subcommand("demand")) common = &demand_opts.common;
        else if (app.got_subcommand("growth")) common = &growth_opts.common;
        else if (app.got_subcommand("sweep")) common = &sweep_opts.common;
        else if (app.got_subcommand("optimize")) common = &optimize_opts.common;
        else if (app.got_subcommand("statics")) common = &statics_opts.common;
        else if (app.got_subcommand("scenario")) common = &scenario_opts.common;
        else common = &calibrate_opts.common;

        Registry registry = default_registry();
        if (!common->config_path.empty()) {
            apply_config_file(registry, common->config_path);
        }

        Emission emission;
        if (app.got_subcommand("demand")) {
            emission = run_demand(registry, demand_opts);
        } else if (app.got_subcommand("growth")) {
            emission = run_growth(registry, growth_opts);
        } else if (app.got_subcommand("sweep")) {
            emission = run_sweep(registry, sweep_opts);
        } else if (app.got_subcommand("optimize")) {
            emission = run_optimize(registry, optimize_opts);
        } else if (app.got_subcommand("statics")) {
            emission = run_statics(registry, statics_opts);
        } else if (app.got_subcommand("scenario")) {
            emission = run_scenario(registry, scenario_opts);
        } else {
            emission = run_calibrate(registry, calibrate_opts);
        }

        write_files(emission);
        out << emission.stdout_text;
        return 0;
    } catch (const InstabilityError& e) {
        err << "error: computation: instability: " << e.what() << "\n";
        return 2;
    } catch (const AnnihilationError& e) {
        err << "error: computation: annihilation: " << e.what() << "\n";
        return 2;
    } catch (const SingularityError& e) {
        err << "error: computation: singularity: " << e.what() << "\n";
        return 2;
    } catch (const ComputationError& e) {
        err << "error: computation: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        err << "error: validation: " << e.what() << "\n";
        return 1;
    }
}

} // namespace milgrowth::cli
