#include "milgrowth/analysis.hpp"

#include <cmath>
#include <limits>

namespace milgrowth {

std::vector<SweepPoint> sweep(const GrowthParams& p, const SweepGrid& grid,
                              double destruction_rate) {
    validate(p);
    if (!std::isfinite(grid.m_min) || !std::isfinite(grid.m_max)) {
        throw ValidationError("grid", "bounds must be finite");
    }
    if (grid.m_min < 0.0 || grid.m_min >= grid.m_max || grid.m_max >= 1.0) {
        throw ValidationError("grid", "requires 0 <= m_min < m_max < 1");
    }
    if (grid.steps < 2) {
        throw ValidationError("grid.steps", "must be >= 2");
    }
    validate_regime(p, RegimePoint{grid.m_min, destruction_rate});

    std::vector<SweepPoint> out;
    out.reserve(static_cast<std::size_t>(grid.steps));
    double span = grid.m_max - grid.m_min;
    for (int i = 0; i < grid.steps; ++i) {
        double m = (i == grid.steps - 1)
                       ? grid.m_max
                       : grid.m_min + span * static_cast<double>(i) /
                                          static_cast<double>(grid.steps - 1);
        out.push_back({m, growth_rate(p, RegimePoint{m, destruction_rate})});
    }
    return out;
}

OptimumReport optimal_burden(const GrowthParams& p, double destruction_rate) {
    validate_regime(p, RegimePoint{0.0, destruction_rate});

    double phi = p.innovation_gain;
    double chi = p.distortion_drag;
    OptimumReport out;

    if (chi == 0.0) {
        if (phi <= 1.0) {
            throw DegenerateCaseError(
                "innovation_gain",
                "no interior optimum: with chi = 0 and phi <= 1 growth is strictly "
                "decreasing in the burden, maximum at m = 0");
        }
        // dg/dm = s*A0*((phi-1) - 2*phi*m): a single linear critical point.
        out.m_star = (phi - 1.0) / (2.0 * phi);
        out.second_root = std::numeric_limits<double>::quiet_NaN();
        out.interior = true;
        out.g_star = growth_rate(p, RegimePoint{out.m_star, destruction_rate});
        return out;
    }

    // dg/dm proportional to q(m) = 3*chi*m^2 - 2*(phi+chi)*m + (phi-1).
    // b < 0, so the discriminant 4*(phi+chi)^2 - 12*chi*(phi-1) is positive
    // for every valid parameter set and sqrt(disc) - b never cancels.
    double qa = 3.0 * chi;
    double qb = -2.0 * (phi + chi);
    double qc = phi - 1.0;
    double disc = qb * qb - 4.0 * qa * qc;
    double q = (std::sqrt(disc) - qb) / 2.0;
    double root_large = q / qa;
    double root_small = qc / q;

    // Curvature of g is s*A0*(6*chi*m - 2*(phi+chi)): negative at the smaller
    // root, so that is the local maximum.
    double curvature_small = 6.0 * chi * root_small - 2.0 * (phi + chi);
    double max_root = curvature_small < 0.0 ? root_small : root_large;
    double other_root = curvature_small < 0.0 ? root_large : root_small;

    out.second_root = other_root;
    if (max_root > 0.0 && max_root < 1.0) {
        out.m_star = max_root;
        out.interior = true;
    } else {
        // The critical maximum lies at or below zero; on [0, 1) growth is
        // highest at the left endpoint.
        out.m_star = 0.0;
        out.interior = false;
    }
    out.g_star = growth_rate(p, RegimePoint{out.m_star, destruction_rate});
    return out;
}

GrowthPartials comparative_statics(const GrowthParams& p, const RegimePoint& r) {
    validate_regime(p, r);
    double m = r.military_burden;
    double uplift = 1.0 + p.innovation_gain * m - p.distortion_drag * m * m;
    double civilian = 1.0 - m;

    GrowthPartials out;
    out.wrt_savings_rate = civilian * p.base_productivity * uplift;
    out.wrt_depreciation = -1.0;
    out.wrt_base_productivity = p.savings_rate * civilian * uplift;
    out.wrt_innovation_gain = p.savings_rate * p.base_productivity * civilian * m;
    out.wrt_distortion_drag = -p.savings_rate * p.base_productivity * civilian * m * m;
    out.wrt_military_burden =
        p.savings_rate * p.base_productivity *
        ((p.innovation_gain - 1.0) - 2.0 * (p.innovation_gain + p.distortion_drag) * m +
         3.0 * p.distortion_drag * m * m);
    out.wrt_destruction_rate = -1.0;
    return out;
}

Regime classify_regime(const GrowthParams& p, double military_burden,
                       double tolerance) {
    validate(RegimePoint{military_burden, 0.0});
    if (!(tolerance >= 0.0) || !std::isfinite(tolerance)) {
        throw ValidationError("tolerance", "must be a finite value >= 0");
    }
    double m_star = optimal_burden(p).m_star;
    if (military_burden < m_star - tolerance) {
        return Regime::BelowOptimum;
    }
    if (military_burden > m_star + tolerance) {
        return Regime::PermanentWarEconomy;
    }
    return Regime::NearOptimum;
}

} // namespace milgrowth
