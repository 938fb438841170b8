#include "milgrowth/calibration.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace milgrowth {

namespace {

void validate_observation(const GrowthObservation& obs, double depreciation,
                          const std::string& prefix) {
    validate(RegimePoint{obs.military_burden, obs.destruction_rate}, prefix);
    if (depreciation + obs.destruction_rate >= 1.0) {
        throw ValidationError(prefix + ".destruction_rate",
                              "depreciation + destruction_rate must be < 1");
    }
    if (!std::isfinite(obs.growth)) {
        throw ValidationError(prefix + ".growth", "must be a finite number");
    }
}

void validate_rate(double value, const char* field) {
    if (!std::isfinite(value) || value <= 0.0 || value >= 1.0) {
        throw ValidationError(field, "must be in (0, 1)");
    }
}

} // namespace

double solve_base_productivity(double savings_rate, double depreciation,
                               double innovation_gain, double distortion_drag,
                               const GrowthObservation& target) {
    validate_rate(savings_rate, "savings_rate");
    validate_rate(depreciation, "depreciation");
    if (!std::isfinite(innovation_gain) || innovation_gain < 0.0) {
        throw ValidationError("innovation_gain", "must be >= 0");
    }
    if (!std::isfinite(distortion_drag) || distortion_drag < 0.0) {
        throw ValidationError("distortion_drag", "must be >= 0");
    }
    validate_observation(target, depreciation, "target");

    double m = target.military_burden;
    double uplift = 1.0 + innovation_gain * m - distortion_drag * m * m;
    double denominator = savings_rate * (1.0 - m) * uplift;
    if (std::abs(denominator) <= 1e-12) {
        throw SingularityError(
            "cannot solve for base productivity: s*(1-m)*(1 + phi*m - chi*m^2) = " +
            std::to_string(denominator));
    }
    double base_productivity =
        (target.growth + depreciation + target.destruction_rate) / denominator;
    if (base_productivity <= 0.0) {
        throw ValidationError("target.growth",
                              "implies a non-positive base productivity");
    }
    return base_productivity;
}

InnovationFit fit_innovation(double savings_rate, double depreciation,
                             double base_productivity, const GrowthObservation& first,
                             const GrowthObservation& second) {
    validate_rate(savings_rate, "savings_rate");
    validate_rate(depreciation, "depreciation");
    if (!std::isfinite(base_productivity) || base_productivity <= 0.0) {
        throw ValidationError("base_productivity", "must be > 0");
    }
    validate_observation(first, depreciation, "first");
    validate_observation(second, depreciation, "second");
    if (first.military_burden <= 0.0) {
        throw ValidationError("first.military_burden", "must be > 0");
    }
    if (second.military_burden <= 0.0) {
        throw ValidationError("second.military_burden", "must be > 0");
    }

    double m1 = first.military_burden;
    double m2 = second.military_burden;
    if (std::abs(m1 - m2) <= 1e-12 * std::max(m1, m2)) {
        throw SingularityError("cannot fit innovation curve: the two observed "
                               "burdens coincide, system is singular");
    }

    // Normalized uplift targets: phi*m_i - chi*m_i^2 = b_i.
    double b1 = (first.growth + depreciation + first.destruction_rate) /
                    (savings_rate * (1.0 - m1) * base_productivity) -
                1.0;
    double b2 = (second.growth + depreciation + second.destruction_rate) /
                    (savings_rate * (1.0 - m2) * base_productivity) -
                1.0;

    double det = m1 * m2 * (m1 - m2);
    InnovationFit fit;
    fit.innovation_gain = (m1 * m1 * b2 - m2 * m2 * b1) / det;
    fit.distortion_drag = (m1 * b2 - m2 * b1) / det;
    return fit;
}

} // namespace milgrowth
