#include "quantplan/sim_verify.hpp"

#include "quantplan/error.hpp"
#include "quantplan/price_quality.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace quantplan {

SimConfig default_config(int order_k, int n, double f_p_hz) {
    SimConfig c;
    c.order_k = order_k;
    c.n = n;
    c.f_p_hz = f_p_hz;
    c.probe_freq_hz = f_p_hz;
    return c;
}

void validate(const SimConfig& config) {
    if (config.order_k < 1)
        throw InvalidArgument("simulation derivative order must be >= 1");
    if (config.n < 1)
        throw InvalidArgument("N must be >= 1");
    if (!(config.f_p_hz > 0.0) || !std::isfinite(config.f_p_hz))
        throw InvalidArgument("base rate F_p must be positive and finite");
    if (!(config.probe_freq_hz > 0.0) || !std::isfinite(config.probe_freq_hz))
        throw InvalidArgument("probe frequency must be positive and finite");
    if (!std::isfinite(config.probe_phase_rad))
        throw InvalidArgument("probe phase must be finite");
    if (!(config.alpha >= 0.0 && config.alpha <= 1.0))
        throw InvalidArgument("alpha must lie in [0, 1]");
    if (config.periods < 1)
        throw InvalidArgument("averaging window needs at least one period");
    if (config.grid < 64)
        throw InvalidArgument("quadrature grid must be >= 64 points per period");
    if (!(config.probe_freq_hz * config.dt_s() < 0.5))
        throw InvalidArgument("probe aliases: probe_freq * dt must be < 1/2 "
                              "(phase step must stay below pi)");
}

namespace {

struct Probe {
    HarmonicSum signal;
    HarmonicSum derivative;
    double window;
    std::size_t samples;
};

Probe make_probe(const SimConfig& c) {
    validate(c);
    Probe p;
    p.signal = HarmonicSum{{1.0, c.probe_freq_hz, c.probe_phase_rad}};
    p.derivative = exact_derivative(p.signal, c.order_k);
    p.window = c.periods / c.probe_freq_hz;
    p.samples = static_cast<std::size_t>(c.periods) * static_cast<std::size_t>(c.grid) + 1;
    return p;
}

} // namespace

double relative_rms_error(const TimeFunction& probe, const TimeFunction& exact_kth, int k,
                          double dt, double alpha, double t0, double window,
                          std::size_t samples) {
    const double shift = alpha * k * dt;
    const auto residual = [&](double t) {
        return velocity_estimate(probe, k, dt, t) - exact_kth(t + shift);
    };
    const double ms_residual = mean_square(residual, t0, window, samples);
    const double ms_exact = mean_square([&](double t) { return exact_kth(t + shift); }, t0,
                                        window, samples);
    if (!(ms_exact > 0.0))
        throw NumericalError("exact derivative has zero mean square; relative error undefined");
    return std::sqrt(ms_residual / ms_exact);
}

SimReport empirical_error(const SimConfig& config) {
    const Probe p = make_probe(config);
    const double dt = config.dt_s();

    SimReport report;
    report.r_empirical =
        relative_rms_error(p.signal, p.derivative, config.order_k, dt, config.alpha, 0.0,
                           p.window, p.samples);
    report.r_model = quality_error(config.n);
    report.x = 2.0 * std::numbers::pi * config.probe_freq_hz * dt;
    report.gap = report.r_empirical - report.r_model;
    return report;
}

std::vector<ResidualSample> residual_trace(const SimConfig& config) {
    const Probe p = make_probe(config);
    const double dt = config.dt_s();
    const double shift = config.alpha * config.order_k * dt;
    const double h = p.window / static_cast<double>(p.samples - 1);

    std::vector<ResidualSample> out;
    out.reserve(p.samples);
    for (std::size_t i = 0; i < p.samples; ++i) {
        ResidualSample s;
        s.t = static_cast<double>(i) * h;
        s.v_est = velocity_estimate(p.signal, config.order_k, dt, s.t);
        s.exact = eval(p.derivative, s.t + shift);
        s.residual = s.v_est - s.exact;
        out.push_back(s);
    }
    return out;
}

double closed_form_error_k1(double x, double alpha) {
    if (!(x > 0.0 && x < std::numbers::pi))
        throw InvalidArgument("phase step x must lie in (0, pi)");
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw InvalidArgument("alpha must lie in [0, 1]");
    const double re = (std::cos(x) - 1.0) + x * std::sin(alpha * x);
    const double im = x * std::cos(alpha * x) - std::sin(x);
    return std::sqrt(re * re + im * im) / x;
}

double alias_frequency(double f_hz, double f_sample_hz) {
    if (!(f_sample_hz > 0.0) || !std::isfinite(f_sample_hz))
        throw InvalidArgument("sampling frequency must be positive and finite");
    if (!(f_hz >= 0.0) || !std::isfinite(f_hz))
        throw InvalidArgument("frequency must be finite and non-negative");
    return std::abs(f_hz - f_sample_hz * std::round(f_hz / f_sample_hz));
}

std::vector<Sample> decimate(std::span<const Sample> samples, int k_d) {
    if (k_d < 1)
        throw InvalidArgument("decimation coefficient must be >= 1");
    if (samples.size() >= 2) {
        const double step = samples[1].t - samples[0].t;
        if (!(step > 0.0))
            throw InvalidArgument("samples must be strictly increasing in time");
        for (std::size_t i = 1; i < samples.size(); ++i) {
            const double d = samples[i].t - samples[i - 1].t;
            if (std::abs(d - step) > 1e-9 * step)
                throw InvalidArgument("samples are not uniformly spaced at index " +
                                      std::to_string(i));
        }
    }
    std::vector<Sample> out;
    out.reserve(samples.size() / static_cast<std::size_t>(k_d) + 1);
    for (std::size_t i = 0; i < samples.size(); i += static_cast<std::size_t>(k_d))
        out.push_back(samples[i]);
    return out;
}

} // namespace quantplan
