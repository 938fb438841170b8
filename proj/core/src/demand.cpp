#include "milgrowth/demand.hpp"

#include <cmath>
#include <string>

namespace milgrowth {

namespace {

void require_finite(double v, const char* field) {
    if (!std::isfinite(v)) {
        throw ValidationError(std::string("demand.") + field, "must be a finite number");
    }
}

} // namespace

GoodsMarket::GoodsMarket(const DemandParams& params) : params_(params), multiplier_(0.0) {
    require_finite(params.autonomous_consumption, "autonomous_consumption");
    require_finite(params.consumption_propensity, "consumption_propensity");
    require_finite(params.tax_rate, "tax_rate");
    require_finite(params.autonomous_investment, "autonomous_investment");
    require_finite(params.investment_accelerator, "investment_accelerator");
    require_finite(params.interest_sensitivity, "interest_sensitivity");
    require_finite(params.interest_rate, "interest_rate");
    require_finite(params.civilian_spending, "civilian_spending");
    require_finite(params.military_spending, "military_spending");

    if (params.consumption_propensity <= 0.0 || params.consumption_propensity >= 1.0) {
        throw ValidationError("demand.consumption_propensity", "must be in (0, 1)");
    }
    if (params.tax_rate < 0.0 || params.tax_rate >= 1.0) {
        throw ValidationError("demand.tax_rate", "must be in [0, 1)");
    }
    if (params.investment_accelerator <= 0.0) {
        throw ValidationError("demand.investment_accelerator", "must be > 0");
    }
    if (params.interest_sensitivity <= 0.0) {
        throw ValidationError("demand.interest_sensitivity", "must be > 0");
    }

    double denominator = 1.0 - params.consumption_propensity * (1.0 - params.tax_rate) -
                         params.investment_accelerator;
    if (denominator <= 0.0) {
        throw InstabilityError(
            "unstable goods market: 1 - c1*(1-tau) - i1 = " +
                std::to_string(denominator) + " (must be > 0)",
            denominator);
    }
    multiplier_ = 1.0 / denominator;
}

DemandSolution GoodsMarket::equilibrium() const {
    // Output is assembled as autonomous + multiplier * G_m so the reported
    // decomposition is an identity, not an approximation.
    double autonomous =
        multiplier_ * (params_.autonomous_consumption + params_.autonomous_investment -
                       params_.interest_sensitivity * params_.interest_rate +
                       params_.civilian_spending);
    DemandSolution out;
    out.multiplier = multiplier_;
    out.autonomous_component = autonomous;
    out.output = autonomous + multiplier_ * params_.military_spending;
    return out;
}

} // namespace milgrowth
