#pragma once

#include <string_view>

namespace quantplan {

/// Which response the suppression level refers to: |H|^2 or |H|.
enum class LevelDomain { power, amplitude };

std::string_view to_string(LevelDomain domain) noexcept;
/// Parses "power" / "amplitude" (case-insensitive); throws InvalidArgument.
LevelDomain parse_level_domain(std::string_view text);

/// Cascade of `links` identical, buffered first-order RC sections with
/// time constant T = RC. Power response is (1 / (1 + (2*pi*f*T)^2))^links.
class RcCascade {
public:
    RcCascade(int links, double time_constant_s);

    int links() const noexcept { return links_; }
    double time_constant_s() const noexcept { return time_constant_s_; }

    /// Frequency where the power response is exactly 1/2.
    double half_power_hz() const noexcept;

    bool operator==(const RcCascade&) const = default;

private:
    int links_;
    double time_constant_s_;
};

/// Power response in (0, 1]; 1 at DC. Throws InvalidArgument for f < 0.
double power_response(const RcCascade& filter, double f_hz);

/// Time constant that puts the half-power point of an n-link cascade at f_half:
/// T = sqrt(2^(1/n) - 1) / (2*pi*f_half).
double solve_time_constant(int links, double f_half_hz);

/// Frequency at which the response falls to `level` (0 < level < 1), found
/// by bisection to a relative width below 1e-12. The bracket is
/// [f_half/1e6, f_half*1e6]; a level outside it raises NumericalError.
double solve_cutoff(const RcCascade& filter, double level, LevelDomain domain);

} // namespace quantplan
