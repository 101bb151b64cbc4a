#include "quantplan/filter_model.hpp"

#include "quantplan/error.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <string>

namespace quantplan {

namespace {

constexpr double kBracketSpan = 1e6;
constexpr int kMaxBisections = 200;
constexpr double kRelativeWidth = 1e-12;

} // namespace

std::string_view to_string(LevelDomain domain) noexcept {
    return domain == LevelDomain::power ? "power" : "amplitude";
}

LevelDomain parse_level_domain(std::string_view text) {
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "power")
        return LevelDomain::power;
    if (lower == "amplitude")
        return LevelDomain::amplitude;
    throw InvalidArgument("level domain must be 'power' or 'amplitude', got '" +
                          std::string(text) + "'");
}

RcCascade::RcCascade(int links, double time_constant_s)
    : links_(links), time_constant_s_(time_constant_s) {
    if (links < 1)
        throw InvalidArgument("RC cascade needs at least one link");
    if (!(time_constant_s > 0.0) || !std::isfinite(time_constant_s))
        throw InvalidArgument("RC time constant must be positive and finite");
}

double RcCascade::half_power_hz() const noexcept {
    return std::sqrt(std::pow(2.0, 1.0 / links_) - 1.0) /
           (2.0 * std::numbers::pi * time_constant_s_);
}

double power_response(const RcCascade& filter, double f_hz) {
    if (!(f_hz >= 0.0))
        throw InvalidArgument("frequency must be non-negative");
    const double x = 2.0 * std::numbers::pi * f_hz * filter.time_constant_s();
    return std::pow(1.0 + x * x, -filter.links());
}

double solve_time_constant(int links, double f_half_hz) {
    if (links < 1)
        throw InvalidArgument("RC cascade needs at least one link");
    if (!(f_half_hz > 0.0) || !std::isfinite(f_half_hz))
        throw InvalidArgument("half-power frequency must be positive and finite");
    return std::sqrt(std::pow(2.0, 1.0 / links) - 1.0) / (2.0 * std::numbers::pi * f_half_hz);
}

double solve_cutoff(const RcCascade& filter, double level, LevelDomain domain) {
    if (!(level > 0.0 && level < 1.0))
        throw InvalidArgument("suppression level must lie in (0, 1)");

    const double target = domain == LevelDomain::power ? level : level * level;
    const double f_half = filter.half_power_hz();
    double lo = f_half / kBracketSpan;
    double hi = f_half * kBracketSpan;

    // power_response is strictly decreasing, so g = response - target goes + to -.
    if (!(power_response(filter, lo) > target) || !(power_response(filter, hi) < target))
        throw NumericalError("suppression level " + std::to_string(level) +
                             " is not bracketed within [f_half/1e6, f_half*1e6]");

    for (int i = 0; i < kMaxBisections && (hi - lo) > kRelativeWidth * lo; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (power_response(filter, mid) > target)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace quantplan
