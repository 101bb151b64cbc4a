#pragma once

#include "quantplan/filter_model.hpp"
#include "quantplan/price_quality.hpp"

#include <span>
#include <vector>

namespace quantplan {

/// Inputs for an end-to-end sampling plan.
struct PlanRequest {
    double f_v_hz = 0.0; ///< signal band edge F_v
    int order_k = 1;
    RcCascade filter{2, 1.0};
    double suppression_level = 0.1;
    LevelDomain suppression_domain = LevelDomain::power;
    double f_adc_hz = 0.0; ///< maximum ADC rate F_s
    double fp_margin = 1.0; ///< F_p = fp_margin * 2 * f_s
};

/// Result of planning one derivative order.
///
/// Invariants: f_o_hz == 2 * n_opt * f_p_hz, k_d == 2 * n_opt (so
/// k_d * f_p_hz == f_o_hz), f_o_hz <= F_s, and j_at_opt is the minimum j
/// over `sweep`.
struct SamplingPlan {
    int order_k = 0;
    double f_s_hz = 0.0;
    double f_p_hz = 0.0;
    int n_opt = 0;
    double f_o_hz = 0.0;
    int k_d = 0;
    double f2_min_hz = 0.0;
    double r_at_opt = 0.0;
    double j_at_opt = 0.0;
    std::vector<FunctionalPoint> sweep;

    bool operator==(const SamplingPlan&) const = default;
};

struct CombinedPlan {
    double f_o_hz = 0.0;
    int k_d = 0;

    bool operator==(const CombinedPlan&) const = default;
};

/// Integer N in [1, floor(F_s/2F_p)] minimizing quality + price; ties go
/// to the smaller N. Throws Infeasible when F_s < 2F_p.
int optimize_n(const PricingParams& params);

/// Real-valued minimizer of the functional near the integer optimum.
/// Informational only; plans always use the integer N.
struct ContinuousOptimum {
    double n = 0.0;
    double j = 0.0;
};
ContinuousOptimum refine_continuous(const PricingParams& params);

/// Filter cutoff -> base rate -> optimal N -> F_o and K_d, with the full sweep.
SamplingPlan build_plan(const PlanRequest& request);

/// Highest optimal rate and smallest decimation coefficient across plans,
/// used when several derivative orders share one ADC.
CombinedPlan combine_plans(std::span<const SamplingPlan> plans);

} // namespace quantplan
