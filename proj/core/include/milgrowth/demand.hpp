#pragma once

#include "milgrowth/errors.hpp"

namespace milgrowth {

/// Short-run goods-market parameters. Plain aggregate; validity is enforced
/// when a GoodsMarket is constructed from it.
struct DemandParams {
    double autonomous_consumption = 0.0;  // c0
    double consumption_propensity = 0.0;  // c1, marginal propensity to consume, in (0,1)
    double tax_rate = 0.0;                // tau, in (0,1)
    double autonomous_investment = 0.0;   // i0
    double investment_accelerator = 0.0;  // i1, investment response to output, > 0
    double interest_sensitivity = 0.0;    // i2, investment response to the rate, > 0
    double interest_rate = 0.0;           // r
    double civilian_spending = 0.0;       // G_c
    double military_spending = 0.0;       // G_m
};

struct DemandSolution {
    double output = 0.0;               // equilibrium Y
    double multiplier = 0.0;           // dY / dG_m = dY / dG_c
    double autonomous_component = 0.0; // Y with G_m removed: Y = autonomous + multiplier * G_m
};

/// Equilibrium of the demand block. Construction validates the parameters and
/// rejects unstable configurations, so an existing GoodsMarket always has a
/// positive, finite multiplier. Instances are immutable and safe to share
/// across threads.
class GoodsMarket {
public:
    /// Throws ValidationError on out-of-range fields; InstabilityError
    /// (reporting the denominator) when 1 - c1*(1-tau) - i1 <= 0.
    explicit GoodsMarket(const DemandParams& params);

    const DemandParams& params() const noexcept { return params_; }

    /// Keynesian multiplier 1 / (1 - c1*(1-tau) - i1).
    double multiplier() const noexcept { return multiplier_; }

    /// Equilibrium output and its decomposition. The identity
    /// output == autonomous_component + multiplier * G_m holds bitwise.
    DemandSolution equilibrium() const;

private:
    DemandParams params_;
    double multiplier_;
};

} // namespace milgrowth
