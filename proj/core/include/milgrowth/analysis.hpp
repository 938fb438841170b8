#pragma once

#include "milgrowth/growth_model.hpp"

#include <vector>

namespace milgrowth {

/// Equally spaced, endpoint-inclusive evaluation grid over the burden axis.
struct SweepGrid {
    double m_min = 0.0;
    double m_max = 0.0; // must satisfy 0 <= m_min < m_max < 1
    int steps = 0;      // number of evaluation points, >= 2
};

struct SweepPoint {
    double military_burden = 0.0;
    double growth = 0.0;
};

/// Where a burden sits relative to the growth-maximizing one.
enum class Regime {
    BelowOptimum,        // m < m* - tol: more burden would raise growth
    NearOptimum,         // |m - m*| <= tol
    PermanentWarEconomy, // m > m* + tol: burden past the growth-maximizing point
};

/// Closed-form growth-maximizing burden over [0, 1).
struct OptimumReport {
    double m_star = 0.0;      // argmax of g(m, d); independent of d
    double g_star = 0.0;      // g(m_star, d)
    bool interior = false;    // false when the maximum sits at m = 0
    double second_root = 0.0; // the other critical point (may lie outside [0,1);
                              // NaN when chi = 0 leaves a linear condition)
};

/// First derivatives of g(m, d) with respect to each input, evaluated at r.
struct GrowthPartials {
    double wrt_savings_rate = 0.0;      // (1-m) * A(m)
    double wrt_depreciation = 0.0;      // -1
    double wrt_base_productivity = 0.0; // s * (1-m) * (1 + phi*m - chi*m^2)
    double wrt_innovation_gain = 0.0;   // s * A0 * (1-m) * m
    double wrt_distortion_drag = 0.0;   // -s * A0 * (1-m) * m^2
    double wrt_military_burden = 0.0;   // s * A0 * ((phi-1) - 2*(phi+chi)*m + 3*chi*m^2)
    double wrt_destruction_rate = 0.0;  // -1
};

/// Evaluate g(m, d) on the grid, ordered by m, endpoints included.
/// Throws ValidationError on a malformed grid or invalid parameters.
std::vector<SweepPoint> sweep(const GrowthParams& p, const SweepGrid& grid,
                              double destruction_rate = 0.0);

/// Growth-maximizing burden via the first-order condition
/// (phi-1) - 2*(phi+chi)*m + 3*chi*m^2 = 0, smaller root taken through the
/// product-of-roots identity, maximum confirmed by the second-derivative sign.
/// Throws DegenerateCaseError when chi = 0 and phi <= 1 (g strictly
/// decreasing, maximum pinned at m = 0).
OptimumReport optimal_burden(const GrowthParams& p, double destruction_rate = 0.0);

/// Analytic partials of g at (p, r). Matches central finite differences.
GrowthPartials comparative_statics(const GrowthParams& p, const RegimePoint& r);

/// Compare a burden against the growth-maximizing one. `tolerance` is the
/// absolute half-width of the NearOptimum band.
Regime classify_regime(const GrowthParams& p, double military_burden,
                       double tolerance = 1e-4);

} // namespace milgrowth
