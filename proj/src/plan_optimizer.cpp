#include "quantplan/plan_optimizer.hpp"

#include "quantplan/error.hpp"

#include <boost/math/tools/minima.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace quantplan {

namespace {

double functional(const PricingParams& params, int n) { return total(params, n).j; }

// Real-N form of the functional, used only for the continuous refinement.
double functional_real(const PricingParams& params, double n) {
    return 1.0 - std::cos(std::numbers::pi / n) + 2.0 * n * params.f_p_hz / params.f_adc_hz;
}

} // namespace

int optimize_n(const PricingParams& params) {
    const int hi = n_upper(params);

    // The sequence J(1), J(2), ... is convex: 1 - cos(pi/N) is convex for
    // N >= 2, J(1) + J(3) - 2 J(2) = 1/2, and the price term is linear.
    // The first N with a non-negative forward difference is the argmin.
    int lo = 1;
    int top = hi;
    while (lo < top) {
        const int mid = lo + (top - lo) / 2;
        if (functional(params, mid + 1) - functional(params, mid) >= 0.0)
            top = mid;
        else
            lo = mid + 1;
    }

    // Settle rounding noise near a flat minimum with a direct local scan.
    const int from = std::max(1, lo - 2);
    const int to = std::min(hi, lo + 2);
    int best = from;
    double best_j = functional(params, from);
    for (int n = from + 1; n <= to; ++n) {
        const double j = functional(params, n);
        if (j < best_j) {
            best = n;
            best_j = j;
        }
    }
    return best;
}

ContinuousOptimum refine_continuous(const PricingParams& params) {
    const int n_int = optimize_n(params);
    const double lo = std::max(1.0, n_int - 1.0);
    const double hi = std::min(n_max(params), n_int + 1.0);
    if (!(hi > lo))
        return {lo, functional_real(params, lo)};

    const auto f = [&](double n) { return functional_real(params, n); };
    const auto [n, j] =
        boost::math::tools::brent_find_minima(f, lo, hi, std::numeric_limits<double>::digits / 2);

    ContinuousOptimum best{n, j};
    for (double edge : {lo, hi}) {
        const double je = f(edge);
        if (je < best.j)
            best = {edge, je};
    }
    return best;
}

SamplingPlan build_plan(const PlanRequest& request) {
    if (!(request.f_v_hz > 0.0) || !std::isfinite(request.f_v_hz))
        throw InvalidArgument("signal cutoff F_v must be positive and finite");
    if (request.order_k < 0)
        throw InvalidArgument("derivative order must be non-negative");
    if (!(request.fp_margin >= 1.0) || !std::isfinite(request.fp_margin))
        throw InvalidArgument("F_p margin must be finite and >= 1");
    if (!(request.f_adc_hz > 0.0) || !std::isfinite(request.f_adc_hz))
        throw InvalidArgument("ADC rate F_s must be positive and finite");

    SamplingPlan plan;
    plan.order_k = request.order_k;
    plan.f_s_hz =
        solve_cutoff(request.filter, request.suppression_level, request.suppression_domain);

    // Non-strict with a bisection-sized tolerance: f_s == F_v is a valid boundary plan.
    if (plan.f_s_hz < request.f_v_hz * (1.0 - 1e-9))
        throw Infeasible("infeasible: filter suppression cutoff f_s = " +
                         std::to_string(plan.f_s_hz) + " Hz lies below the signal band F_v = " +
                         std::to_string(request.f_v_hz) + " Hz");

    plan.f_p_hz = request.fp_margin * 2.0 * plan.f_s_hz;
    const PricingParams params{request.order_k, plan.f_p_hz, request.f_adc_hz};
    validate(params);

    plan.n_opt = optimize_n(params);
    plan.sweep = sweep(params);
    plan.f_o_hz = 2.0 * plan.n_opt * plan.f_p_hz;
    plan.k_d = 2 * plan.n_opt;
    plan.f2_min_hz = min_rate(request.order_k, request.f_v_hz);

    const FunctionalPoint& at = plan.sweep[static_cast<std::size_t>(plan.n_opt - 1)];
    plan.r_at_opt = at.r;
    plan.j_at_opt = at.j;
    return plan;
}

CombinedPlan combine_plans(std::span<const SamplingPlan> plans) {
    if (plans.empty())
        throw InvalidArgument("combine_plans needs at least one plan");
    CombinedPlan out{plans.front().f_o_hz, plans.front().k_d};
    for (const auto& p : plans.subspan(1)) {
        out.f_o_hz = std::max(out.f_o_hz, p.f_o_hz);
        out.k_d = std::min(out.k_d, p.k_d);
    }
    return out;
}

} // namespace quantplan
