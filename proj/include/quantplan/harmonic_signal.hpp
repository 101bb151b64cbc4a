#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <vector>

namespace quantplan {

/// One cosine component A*cos(2*pi*F*t + theta).
struct Harmonic {
    double amplitude = 0.0;
    double frequency_hz = 0.0;
    double phase_rad = 0.0;
};

/// A finite almost-periodic Fourier sum. Every component not listed has
/// zero amplitude, so the sum is band limited to cutoff_hz().
class HarmonicSum {
public:
    HarmonicSum() = default;
    explicit HarmonicSum(std::vector<Harmonic> terms);
    HarmonicSum(std::initializer_list<Harmonic> terms);

    const std::vector<Harmonic>& terms() const noexcept { return terms_; }
    bool empty() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    /// Highest component frequency (the boundary harmonic), 0 when empty.
    double cutoff_hz() const noexcept;

    double operator()(double t) const;

private:
    std::vector<Harmonic> terms_;
};

using TimeFunction = std::function<double(double)>;

/// Sum of A_k*cos(2*pi*F_k*t + theta_k). Throws InvalidArgument on an
/// empty sum or non-finite t.
double eval(const HarmonicSum& sum, double t);

/// Closed-form k-th time derivative: each term maps to
/// (A*(2*pi*F)^k, F, theta + k*pi/2). k = 0 returns the input.
HarmonicSum exact_derivative(const HarmonicSum& sum, int k);

/// k-th order forward difference sum_{j=0..k} (-1)^(k-j) C(k,j) f(t + j*dt).
/// Requires k >= 1 and dt > 0.
double forward_difference(const TimeFunction& f, int k, double dt, double t);

/// Finite-difference estimate of the k-th derivative, forward_difference / dt^k.
double velocity_estimate(const TimeFunction& f, int k, double dt, double t);

inline constexpr std::size_t kDefaultQuadratureSamples = 4096;

/// Mean square (1/T) * integral of f^2 over [t0, t0 + window], uniform
/// trapezoid with `samples` grid points including both ends. For harmonic
/// sums use a whole number of periods so the infinite-time average is exact.
/// Throws NumericalError if f yields a non-finite value.
double mean_square(const TimeFunction& f, double t0, double window,
                   std::size_t samples = kDefaultQuadratureSamples);

} // namespace quantplan
