#pragma once

#include "milgrowth/growth_model.hpp"

namespace milgrowth {

/// A single calibration target: an observed growth rate under a known regime.
struct GrowthObservation {
    double military_burden = 0.0;
    double destruction_rate = 0.0;
    double growth = 0.0;
};

struct InnovationFit {
    double innovation_gain = 0.0; // phi
    double distortion_drag = 0.0; // chi
};

/// Invert g = s*(1-m)*A0*(1 + phi*m - chi*m^2) - delta - d for A0.
/// Throws SingularityError when s*(1-m)*(1 + phi*m - chi*m^2) vanishes,
/// ValidationError on out-of-range inputs or a non-positive implied A0.
double solve_base_productivity(double savings_rate, double depreciation,
                               double innovation_gain, double distortion_drag,
                               const GrowthObservation& target);

/// Recover (phi, chi) from two observations at distinct positive burdens by
/// solving the 2x2 linear system phi*m_i - chi*m_i^2 = (g_i + delta + d_i) /
/// (s*(1-m_i)*A0) - 1. Throws SingularityError when the burdens coincide
/// (singular system); both burdens must be > 0.
InnovationFit fit_innovation(double savings_rate, double depreciation,
                             double base_productivity, const GrowthObservation& first,
                             const GrowthObservation& second);

} // namespace milgrowth
