#pragma once

#include "quantplan/harmonic_signal.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace quantplan {

/// Finite-difference error experiment on a single unit-amplitude probe
/// harmonic. The estimate at t is compared with the exact derivative at
/// t + alpha * k * dt, where dt = 1 / (2 f_p n).
struct SimConfig {
    int order_k = 1;
    int n = 1;
    double f_p_hz = 0.0;
    double probe_freq_hz = 0.0; ///< default_config() sets this to f_p_hz, giving x = pi / n
    double probe_phase_rad = 0.0;
    double alpha = 0.5;         ///< 1/k reproduces the "alpha k = 1" comparison point
    int periods = 4;            ///< averaging window, in probe periods
    int grid = 256;             ///< quadrature points per probe period, >= 64

    double dt_s() const { return 1.0 / (2.0 * f_p_hz * n); }
};

SimConfig default_config(int order_k, int n, double f_p_hz);

/// Throws InvalidArgument on out-of-range fields, including the aliasing
/// condition probe_freq * dt < 1/2.
void validate(const SimConfig& config);

struct SimReport {
    double r_empirical = 0.0; ///< RMS(residual) / RMS(exact k-th derivative)
    double r_model = 0.0;     ///< closed-form 1 - cos(pi / n)
    double x = 0.0;           ///< probe phase step 2*pi*probe*dt
    double gap = 0.0;         ///< r_empirical - r_model
};

SimReport empirical_error(const SimConfig& config);

/// Generic form of the measurement: sqrt(MS(residual) / MS(exact)), where
/// residual(t) = velocity_estimate(probe, k, dt, t) - exact_kth(t + alpha*k*dt)
/// and MS is the trapezoid mean square over [t0, t0 + window]. Lets tests
/// substitute non-harmonic probes such as monomials.
double relative_rms_error(const TimeFunction& probe, const TimeFunction& exact_kth, int k,
                          double dt, double alpha, double t0, double window,
                          std::size_t samples);

struct ResidualSample {
    double t = 0.0;
    double v_est = 0.0;
    double exact = 0.0;
    double residual = 0.0;
};

/// Per-point residuals over the same grid empirical_error integrates on.
std::vector<ResidualSample> residual_trace(const SimConfig& config);

/// Closed-form relative RMS error for k = 1, phase step x in (0, pi):
/// sqrt(((cos x - 1) + x sin(alpha x))^2 + (x cos(alpha x) - sin x)^2) / x.
double closed_form_error_k1(double x, double alpha);

/// Frequency that f folds to when sampled at f_sample, in [0, f_sample/2].
double alias_frequency(double f_hz, double f_sample_hz);

struct Sample {
    double t = 0.0;
    double value = 0.0;

    bool operator==(const Sample&) const = default;
};

/// Keeps every k_d-th sample starting at index 0. Input must be uniformly
/// spaced in t (relative tolerance 1e-9); throws InvalidArgument otherwise.
std::vector<Sample> decimate(std::span<const Sample> samples, int k_d);

} // namespace quantplan
