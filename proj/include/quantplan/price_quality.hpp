#pragma once

#include <vector>

namespace quantplan {

/// Parameters of the price-quality functional.
///
/// order_k   derivative order being estimated (0 = the coordinate itself)
/// f_p_hz    alias-free base rate F_p (normally 2 * filter cutoff)
/// f_adc_hz  maximum ADC conversion rate F_s
///
/// The oversampling multiplier N ranges over the integers [1, floor(F_s / 2F_p)].
struct PricingParams {
    int order_k = 1;
    double f_p_hz = 0.0;
    double f_adc_hz = 0.0;
};

/// Throws InvalidArgument on malformed values and Infeasible when
/// F_s < 2 F_p (no N >= 1 fits under the ADC rate).
void validate(const PricingParams& params);

/// One evaluation of the functional at multiplier n.
struct FunctionalPoint {
    int n = 0;
    double r = 0.0;    ///< quality term, 1 - cos(pi/n)
    double j2 = 0.0;   ///< price term, 2 n F_p / F_s
    double j = 0.0;    ///< r + j2
    double dt_s = 0.0; ///< difference step 1 / (2 F_p n)

    bool operator==(const FunctionalPoint&) const = default;
};

/// F_s / (2 F_p), the real upper bound on N.
double n_max(const PricingParams& params);

/// floor(n_max), the largest admissible integer N.
int n_upper(const PricingParams& params);

/// Relative error of the finite-difference estimate of the boundary
/// harmonic: 1 - cos(pi / n). Has no dependence on the derivative order.
double quality_error(int n);

/// Relative sample-rate cost 2 n F_p / F_s; equals 1 at 2 n F_p = F_s.
double price(const PricingParams& params, int n);

/// Quality plus price at n, with the matching difference step.
FunctionalPoint total(const PricingParams& params, int n);

/// total() for every integer in [n_lo, n_hi], ascending.
std::vector<FunctionalPoint> sweep(const PricingParams& params, int n_lo, int n_hi);
std::vector<FunctionalPoint> sweep(const PricingParams& params);

/// Minimum sampling rate for a k-th order derivative, 2 (k + 1) F_v.
/// k = 0 is the classical Nyquist rate.
double min_rate(int order_k, double f_v_hz);

} // namespace quantplan
