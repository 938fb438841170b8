#pragma once

#include "milgrowth/errors.hpp"

namespace milgrowth {

/// Structural parameters of the one-sector AK growth block.
/// All functions taking these are pure and safe to call concurrently.
struct GrowthParams {
    double savings_rate = 0.0;      // s, fraction of output saved, in (0,1)
    double depreciation = 0.0;      // delta, fraction of capital per period, in (0,1)
    double base_productivity = 0.0; // A0, output per unit of capital at m=0, > 0
    double innovation_gain = 0.0;   // phi, linear productivity uplift of the burden, >= 0
    double distortion_drag = 0.0;   // chi, quadratic productivity drag of the burden, >= 0
};

/// A policy/conflict state: the military burden and the destruction rate.
struct RegimePoint {
    double military_burden = 0.0;  // m, share of output devoted to the military, in [0,1)
    double destruction_rate = 0.0; // d, fraction of capital destroyed per period, >= 0
};

struct EconomyState {
    double capital = 0.0; // K, must be > 0
};

/// Outcome of one period under a fixed regime.
struct StepResult {
    double next_capital = 0.0;        // (1 - delta - d) * capital + civilian_investment
    double civilian_investment = 0.0; // s * (1-m) * A(m) * capital
    double realized_growth = 0.0;     // (K_next - K) / K; equals growth_rate(p, r) bitwise
};

/// Throws ValidationError on the first violated range, `prefix` prepended to
/// the field path ("growth" -> "growth.savings_rate").
void validate(const GrowthParams& p, const std::string& prefix = "");
void validate(const RegimePoint& r, const std::string& prefix = "");

/// Joint feasibility: delta + d < 1 so retention stays positive.
void validate_regime(const GrowthParams& p, const RegimePoint& r,
                     const std::string& prefix = "");

/// Capital productivity A(m) = A0 * (1 + phi*m - chi*m^2).
/// Hump-shaped in m when chi > 0 (vertex at phi / (2*chi)); may go negative
/// for large burdens, which is meaningful (ruinous distortion).
/// Throws ValidationError if p or m is out of range.
double productivity(const GrowthParams& p, double military_burden);

/// Long-run per-period growth rate g(m, d) = s*(1-m)*A(m) - delta - d.
/// Throws ValidationError if p or r is out of range or delta + d >= 1.
double growth_rate(const GrowthParams& p, const RegimePoint& r);

/// Advance the economy one period under a fixed regime.
/// Throws AnnihilationError if next_capital would be <= 0, ValidationError on
/// bad inputs (including capital <= 0).
StepResult step(const GrowthParams& p, const RegimePoint& r, const EconomyState& state);

} // namespace milgrowth
