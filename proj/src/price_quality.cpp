#include "quantplan/price_quality.hpp"

#include "quantplan/error.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace quantplan {

void validate(const PricingParams& params) {
    if (params.order_k < 0)
        throw InvalidArgument("derivative order must be non-negative");
    if (!(params.f_p_hz > 0.0) || !std::isfinite(params.f_p_hz))
        throw InvalidArgument("base rate F_p must be positive and finite");
    if (!(params.f_adc_hz > 0.0) || !std::isfinite(params.f_adc_hz))
        throw InvalidArgument("ADC rate F_s must be positive and finite");
    if (params.f_adc_hz < 2.0 * params.f_p_hz)
        throw Infeasible("infeasible: ADC rate F_s = " + std::to_string(params.f_adc_hz) +
                         " Hz is below 2F_p = " + std::to_string(2.0 * params.f_p_hz) +
                         " Hz (F_s < 2F_p leaves no N >= 1)");
}

double n_max(const PricingParams& params) {
    validate(params);
    return params.f_adc_hz / (2.0 * params.f_p_hz);
}

int n_upper(const PricingParams& params) {
    return static_cast<int>(std::floor(n_max(params)));
}

double quality_error(int n) {
    if (n < 1)
        throw InvalidArgument("N must be >= 1");
    return 1.0 - std::cos(std::numbers::pi / n);
}

double price(const PricingParams& params, int n) {
    const int hi = n_upper(params);
    if (n < 1 || n > hi)
        throw InvalidArgument("N = " + std::to_string(n) + " outside feasible range [1, " +
                              std::to_string(hi) + "]");
    return 2.0 * n * params.f_p_hz / params.f_adc_hz;
}

FunctionalPoint total(const PricingParams& params, int n) {
    FunctionalPoint p;
    p.n = n;
    p.j2 = price(params, n);
    p.r = quality_error(n);
    p.j = p.r + p.j2;
    p.dt_s = 1.0 / (2.0 * params.f_p_hz * n);
    return p;
}

std::vector<FunctionalPoint> sweep(const PricingParams& params, int n_lo, int n_hi) {
    const int hi = n_upper(params);
    if (n_lo < 1 || n_lo > n_hi || n_hi > hi)
        throw InvalidArgument("sweep range [" + std::to_string(n_lo) + ", " +
                              std::to_string(n_hi) + "] is empty or exceeds [1, " +
                              std::to_string(hi) + "]");
    std::vector<FunctionalPoint> out;
    out.reserve(static_cast<std::size_t>(n_hi - n_lo + 1));
    for (int n = n_lo; n <= n_hi; ++n)
        out.push_back(total(params, n));
    return out;
}

std::vector<FunctionalPoint> sweep(const PricingParams& params) {
    return sweep(params, 1, n_upper(params));
}

double min_rate(int order_k, double f_v_hz) {
    if (order_k < 0)
        throw InvalidArgument("derivative order must be non-negative");
    if (!(f_v_hz > 0.0) || !std::isfinite(f_v_hz))
        throw InvalidArgument("signal cutoff F_v must be positive and finite");
    return 2.0 * (order_k + 1) * f_v_hz;
}

} // namespace quantplan
