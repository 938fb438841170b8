#pragma once

#include "milgrowth/growth_model.hpp"
#include "milgrowth/scenario.hpp"

#include <optional>
#include <string>
#include <vector>

namespace milgrowth {
namespace presets {

/// Stylized closed economy: s=0.20, delta=0.05, A0=0.30, phi=5, chi=60.
GrowthParams baseline();

/// United States calibration: s=0.22, delta=0.05, A0=0.35, phi=6, chi=50.
GrowthParams united_states();

/// Iran calibration: s=0.18, delta=0.06, A0=0.25, phi=4, chi=70.
GrowthParams iran();

RegimePoint us_peace();   // m=0.035, d=0
RegimePoint us_war();     // m=0.07,  d=0.01
RegimePoint iran_peace(); // m=0.03,  d=0
RegimePoint iran_war();   // m=0.10,  d=0.03

/// Preset country (initial capital 100) for the growth presets above.
std::optional<Country> find_country(const std::string& name);

/// Preset regime by name: us-peace, us-war, iran-peace, iran-war.
std::optional<RegimePoint> find_regime(const std::string& name);

std::vector<std::string> country_names();
std::vector<std::string> regime_names();

/// The constant peace/war pairing for a preset country ("us", "iran"),
/// std::nullopt for countries without one (e.g. "baseline").
std::optional<CountryScenario> find_scenario(const std::string& name);

} // namespace presets
} // namespace milgrowth
