#include <benchmark/benchmark.h>

#include "milgrowth/analysis.hpp"
#include "milgrowth/demand.hpp"
#include "milgrowth/growth_model.hpp"
#include "milgrowth/presets.hpp"
#include "milgrowth/scenario.hpp"
#include "milgrowth/svg_plot.hpp"

using namespace milgrowth;

namespace {

void BM_GrowthRate(benchmark::State& state) {
    GrowthParams params = presets::united_states();
    RegimePoint regime = presets::us_peace();
    for (auto _ : state) {
        benchmark::DoNotOptimize(growth_rate(params, regime));
    }
}
BENCHMARK(BM_GrowthRate);

void BM_Step(benchmark::State& state) {
    GrowthParams params = presets::united_states();
    RegimePoint regime = presets::us_war();
    EconomyState economy{100.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(step(params, regime, economy));
    }
}
BENCHMARK(BM_Step);

void BM_Sweep(benchmark::State& state) {
    GrowthParams params = presets::baseline();
    SweepGrid grid{0.0, 0.08, static_cast<int>(state.range(0))};
    for (auto _ : state) {
        benchmark::DoNotOptimize(sweep(params, grid));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Sweep)->Arg(401)->Arg(4001);

void BM_OptimalBurden(benchmark::State& state) {
    GrowthParams params = presets::baseline();
    for (auto _ : state) {
        benchmark::DoNotOptimize(optimal_burden(params));
    }
}
BENCHMARK(BM_OptimalBurden);

void BM_GridArgmax(benchmark::State& state) {
    GrowthParams params = presets::baseline();
    double step_width = 1e-5;
    for (auto _ : state) {
        double best_m = 0.0;
        double best_g = -1e300;
        for (long i = 0;; ++i) {
            double m = static_cast<double>(i) * step_width;
            if (m >= 1.0) break;
            double g = growth_rate(params, RegimePoint{m, 0.0});
            if (g > best_g) {
                best_g = g;
                best_m = m;
            }
        }
        benchmark::DoNotOptimize(best_m);
    }
}
BENCHMARK(BM_GridArgmax);

void BM_ComparativeStatics(benchmark::State& state) {
    GrowthParams params = presets::iran();
    RegimePoint regime = presets::iran_war();
    for (auto _ : state) {
        benchmark::DoNotOptimize(comparative_statics(params, regime));
    }
}
BENCHMARK(BM_ComparativeStatics);

void BM_Simulate(benchmark::State& state) {
    Country country = *presets::find_country("us");
    Schedule schedule = constant_schedule(presets::us_war(),
                                          static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(simulate(country, schedule));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Simulate)->Arg(10)->Arg(100)->Arg(1000);

void BM_Equilibrium(benchmark::State& state) {
    DemandParams params;
    params.autonomous_consumption = 10.0;
    params.consumption_propensity = 0.8;
    params.tax_rate = 0.25;
    params.autonomous_investment = 5.0;
    params.investment_accelerator = 0.1;
    params.interest_sensitivity = 20.0;
    params.interest_rate = 0.05;
    params.civilian_spending = 10.0;
    params.military_spending = 5.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(GoodsMarket(params).equilibrium());
    }
}
BENCHMARK(BM_Equilibrium);

void BM_RenderSvg(benchmark::State& state) {
    auto us = sweep(presets::united_states(), {0.0, 0.12, 241});
    auto iran = sweep(presets::iran(), {0.0, 0.12, 241});
    std::vector<PlotSeries> series{{"United States", us}, {"Iran", iran}};
    std::vector<PlotMarker> markers{
        {"US peace", 0.035, MarkerStyle::Dotted},
        {"US war", 0.07, MarkerStyle::DashDot},
    };
    for (auto _ : state) {
        benchmark::DoNotOptimize(render_plot_svg(series, markers));
    }
}
BENCHMARK(BM_RenderSvg);

} // namespace

BENCHMARK_MAIN();
