#include "quantplan/harmonic_signal.hpp"

#include "quantplan/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace quantplan {

namespace {

void validate(const Harmonic& h) {
    if (!std::isfinite(h.amplitude) || h.amplitude < 0.0)
        throw InvalidArgument("harmonic amplitude must be finite and non-negative");
    if (!std::isfinite(h.frequency_hz) || h.frequency_hz < 0.0)
        throw InvalidArgument("harmonic frequency must be finite and non-negative");
    if (!std::isfinite(h.phase_rad))
        throw InvalidArgument("harmonic phase must be finite");
}

} // namespace

HarmonicSum::HarmonicSum(std::vector<Harmonic> terms) : terms_(std::move(terms)) {
    std::for_each(terms_.begin(), terms_.end(), validate);
}

HarmonicSum::HarmonicSum(std::initializer_list<Harmonic> terms)
    : HarmonicSum(std::vector<Harmonic>(terms)) {}

double HarmonicSum::cutoff_hz() const noexcept {
    double top = 0.0;
    for (const auto& h : terms_)
        top = std::max(top, h.frequency_hz);
    return top;
}

double HarmonicSum::operator()(double t) const { return eval(*this, t); }

double eval(const HarmonicSum& sum, double t) {
    if (sum.empty())
        throw InvalidArgument("cannot evaluate an empty harmonic sum");
    if (!std::isfinite(t))
        throw InvalidArgument("evaluation time must be finite");
    double acc = 0.0;
    for (const auto& h : sum.terms())
        acc += h.amplitude * std::cos(2.0 * std::numbers::pi * h.frequency_hz * t + h.phase_rad);
    return acc;
}

HarmonicSum exact_derivative(const HarmonicSum& sum, int k) {
    if (k < 0)
        throw InvalidArgument("derivative order must be non-negative");
    if (k == 0)
        return sum;
    std::vector<Harmonic> out;
    out.reserve(sum.size());
    for (const auto& h : sum.terms()) {
        const double omega = 2.0 * std::numbers::pi * h.frequency_hz;
        out.push_back({h.amplitude * std::pow(omega, k), h.frequency_hz,
                       h.phase_rad + k * std::numbers::pi / 2.0});
    }
    return HarmonicSum(std::move(out));
}

double forward_difference(const TimeFunction& f, int k, double dt, double t) {
    if (k < 1)
        throw InvalidArgument("forward difference order must be >= 1; use eval for k = 0");
    if (!(dt > 0.0) || !std::isfinite(dt))
        throw InvalidArgument("difference step dt must be positive and finite");
    // Repeated first differences; equal to the signed binomial sum but
    // exact on constants and better conditioned on polynomials.
    std::vector<double> v(static_cast<std::size_t>(k) + 1);
    for (int j = 0; j <= k; ++j)
        v[static_cast<std::size_t>(j)] = f(t + j * dt);
    for (int order = 0; order < k; ++order)
        for (std::size_t j = 0; j + 1 < v.size() - static_cast<std::size_t>(order); ++j)
            v[j] = v[j + 1] - v[j];
    return v[0];
}

double velocity_estimate(const TimeFunction& f, int k, double dt, double t) {
    const double diff = forward_difference(f, k, dt, t);
    return diff / std::pow(dt, k);
}

double mean_square(const TimeFunction& f, double t0, double window, std::size_t samples) {
    if (!(window > 0.0) || !std::isfinite(window))
        throw InvalidArgument("mean-square window must be positive and finite");
    if (samples < 2)
        throw InvalidArgument("mean-square quadrature needs at least 2 samples");
    if (!std::isfinite(t0))
        throw InvalidArgument("mean-square start time must be finite");

    const double h = window / static_cast<double>(samples - 1);
    double acc = 0.0;
    for (std::size_t i = 0; i < samples; ++i) {
        const double t = t0 + static_cast<double>(i) * h;
        const double v = f(t);
        if (!std::isfinite(v))
            throw NumericalError("non-finite sample in mean-square integrand at t = " +
                                 std::to_string(t));
        const double w = (i == 0 || i + 1 == samples) ? 0.5 : 1.0;
        acc += w * v * v;
    }
    return acc * h / window;
}

} // namespace quantplan
