#include "milgrowth/growth_model.hpp"

#include <cmath>
#include <string>

namespace milgrowth {

namespace {

std::string join(const std::string& prefix, const char* field) {
    return prefix.empty() ? std::string(field) : prefix + "." + field;
}

void require_finite(double v, const std::string& prefix, const char* field) {
    if (!std::isfinite(v)) {
        throw ValidationError(join(prefix, field), "must be a finite number");
    }
}

// Shared by growth_rate() and step() so realized_growth matches the closed
// form bitwise. The final subtractions are kept in this order; the level-shift
// identities in the analysis layer rely on d being subtracted last.
double growth_rate_unchecked(const GrowthParams& p, const RegimePoint& r) {
    double a = p.base_productivity *
               (1.0 + p.innovation_gain * r.military_burden -
                p.distortion_drag * r.military_burden * r.military_burden);
    double investment_rate = p.savings_rate * (1.0 - r.military_burden) * a;
    return (investment_rate - p.depreciation) - r.destruction_rate;
}

} // namespace

void validate(const GrowthParams& p, const std::string& prefix) {
    require_finite(p.savings_rate, prefix, "savings_rate");
    require_finite(p.depreciation, prefix, "depreciation");
    require_finite(p.base_productivity, prefix, "base_productivity");
    require_finite(p.innovation_gain, prefix, "innovation_gain");
    require_finite(p.distortion_drag, prefix, "distortion_drag");
    if (p.savings_rate <= 0.0 || p.savings_rate >= 1.0) {
        throw ValidationError(join(prefix, "savings_rate"), "must be in (0, 1)");
    }
    if (p.depreciation <= 0.0 || p.depreciation >= 1.0) {
        throw ValidationError(join(prefix, "depreciation"), "must be in (0, 1)");
    }
    if (p.base_productivity <= 0.0) {
        throw ValidationError(join(prefix, "base_productivity"), "must be > 0");
    }
    if (p.innovation_gain < 0.0) {
        throw ValidationError(join(prefix, "innovation_gain"), "must be >= 0");
    }
    if (p.distortion_drag < 0.0) {
        throw ValidationError(join(prefix, "distortion_drag"), "must be >= 0");
    }
}

void validate(const RegimePoint& r, const std::string& prefix) {
    require_finite(r.military_burden, prefix, "military_burden");
    require_finite(r.destruction_rate, prefix, "destruction_rate");
    if (r.military_burden < 0.0 || r.military_burden >= 1.0) {
        throw ValidationError(join(prefix, "military_burden"), "must be in [0, 1)");
    }
    if (r.destruction_rate < 0.0) {
        throw ValidationError(join(prefix, "destruction_rate"), "must be >= 0");
    }
}

void validate_regime(const GrowthParams& p, const RegimePoint& r,
                     const std::string& prefix) {
    validate(p, prefix);
    validate(r, prefix);
    if (p.depreciation + r.destruction_rate >= 1.0) {
        throw ValidationError(join(prefix, "destruction_rate"),
                              "depreciation + destruction_rate must be < 1");
    }
}

double productivity(const GrowthParams& p, double military_burden) {
    validate(p);
    validate(RegimePoint{military_burden, 0.0});
    return p.base_productivity *
           (1.0 + p.innovation_gain * military_burden -
            p.distortion_drag * military_burden * military_burden);
}

double growth_rate(const GrowthParams& p, const RegimePoint& r) {
    validate_regime(p, r);
    return growth_rate_unchecked(p, r);
}

StepResult step(const GrowthParams& p, const RegimePoint& r, const EconomyState& state) {
    validate_regime(p, r);
    require_finite(state.capital, "", "capital");
    if (state.capital <= 0.0) {
        throw ValidationError("capital", "must be > 0");
    }

    double a = productivity(p, r.military_burden);
    double retention = (1.0 - p.depreciation) - r.destruction_rate;
    StepResult out;
    out.civilian_investment =
        p.savings_rate * (1.0 - r.military_burden) * a * state.capital;
    out.next_capital = retention * state.capital + out.civilian_investment;
    out.realized_growth = growth_rate_unchecked(p, r);
    if (out.next_capital <= 0.0) {
        throw AnnihilationError(
            "capital stock annihilated: growth factor 1 - delta - d + s*(1-m)*A(m) "
            "is not positive");
    }
    return out;
}

} // namespace milgrowth
