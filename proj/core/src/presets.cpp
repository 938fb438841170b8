#include "milgrowth/presets.hpp"

namespace milgrowth {
namespace presets {

GrowthParams baseline() { return GrowthParams{0.20, 0.05, 0.30, 5.0, 60.0}; }

GrowthParams united_states() { return GrowthParams{0.22, 0.05, 0.35, 6.0, 50.0}; }

GrowthParams iran() { return GrowthParams{0.18, 0.06, 0.25, 4.0, 70.0}; }

RegimePoint us_peace() { return RegimePoint{0.035, 0.0}; }

RegimePoint us_war() { return RegimePoint{0.07, 0.01}; }

RegimePoint iran_peace() { return RegimePoint{0.03, 0.0}; }

RegimePoint iran_war() { return RegimePoint{0.10, 0.03}; }

std::optional<Country> find_country(const std::string& name) {
    if (name == "baseline") return Country{"baseline", baseline(), 100.0};
    if (name == "us") return Country{"us", united_states(), 100.0};
    if (name == "iran") return Country{"iran", iran(), 100.0};
    return std::nullopt;
}

std::optional<RegimePoint> find_regime(const std::string& name) {
    if (name == "us-peace") return us_peace();
    if (name == "us-war") return us_war();
    if (name == "iran-peace") return iran_peace();
    if (name == "iran-war") return iran_war();
    return std::nullopt;
}

std::vector<std::string> country_names() { return {"baseline", "us", "iran"}; }

std::vector<std::string> regime_names() {
    return {"us-peace", "us-war", "iran-peace", "iran-war"};
}

std::optional<CountryScenario> find_scenario(const std::string& name) {
    if (name == "us") return CountryScenario{*find_country("us"), us_peace(), us_war()};
    if (name == "iran") {
        return CountryScenario{*find_country("iran"), iran_peace(), iran_war()};
    }
    return std::nullopt;
}

} // namespace presets
} // namespace milgrowth
