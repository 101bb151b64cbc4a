#include "oracles.hpp"

#include "quantplan/error.hpp"
#include "quantplan/sim_verify.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

using namespace quantplan;
using doctest::Approx;

namespace {

constexpr double kFp = 9120.0;

// Phase step x = pi / n with the probe at F_p.
SimConfig config_for(int n, double alpha) {
    SimConfig c = default_config(1, n, kFp);
    c.alpha = alpha;
    return c;
}

// Closed-form k = 1 error reduced to real arithmetic on the phasor
// (e^{ix} - 1)/x - i e^{i alpha x}, written independently of the library form.
double phasor_error_k1(double x, double alpha) {
    const double re = (std::cos(x) - 1.0) / x + std::sin(alpha * x);
    const double im = std::sin(x) / x - std::cos(alpha * x);
    return std::hypot(re, im);
}

} // namespace

TEST_SUITE("sim_verify") {

TEST_CASE("closed_form_error_k1") {
    for (double x : {oracle::pi / 4, oracle::pi / 5, oracle::pi / 10, oracle::pi / 20, 2.5})
        for (double alpha : {0.0, 0.25, 0.5, 1.0})
            CHECK(closed_form_error_k1(x, alpha) == Approx(phasor_error_k1(x, alpha)).epsilon(1e-12));

    CHECK(closed_form_error_k1(oracle::pi / 10, 0.5) ==
          Approx(oracle::midpoint_error_k1(oracle::pi / 10)).epsilon(1e-10));
    CHECK(closed_form_error_k1(oracle::pi / 10, 0.5) == Approx(0.0041072647564).epsilon(1e-9));
    CHECK(closed_form_error_k1(oracle::pi / 2, 0.0) == Approx(0.7330279151598).epsilon(1e-11));
    CHECK(closed_form_error_k1(1e-6, 0.5) < 1e-9);
    CHECK(closed_form_error_k1(1e-6, 1.0) < 1e-5);

    CHECK_THROWS_AS(closed_form_error_k1(0.0, 0.5), InvalidArgument);
    CHECK_THROWS_AS(closed_form_error_k1(oracle::pi, 0.5), InvalidArgument);
    CHECK_THROWS_AS(closed_form_error_k1(1.0, 1.5), InvalidArgument);
}

TEST_CASE("empirical_error reports") {
    SUBCASE("midpoint comparison at x = pi/5") {
        const auto r = empirical_error(config_for(5, 0.5));
        CHECK(r.x == Approx(oracle::pi / 5).epsilon(1e-14));
        CHECK(r.r_empirical == Approx(oracle::midpoint_error_k1(oracle::pi / 5)).epsilon(1e-6));
        CHECK(std::abs(r.r_empirical - 0.016370) < 1e-5);
        CHECK(r.r_model == Approx(1.0 - std::cos(oracle::pi / 5)).epsilon(1e-14));
        CHECK(r.gap == r.r_empirical - r.r_model);
    }

    SUBCASE("end-of-step comparison exceeds the closed-form model") {
        const auto r = empirical_error(config_for(5, 1.0));
        CHECK(r.r_empirical == Approx(0.3107292095986).epsilon(1e-6));
        CHECK(r.gap > 0.0);
    }

    SUBCASE("error vanishes as the step shrinks") {
        double prev = 1.0;
        for (int n : {10, 100, 1000, 10000}) {
            for (double alpha : {0.0, 0.5, 1.0}) {
                const double e = empirical_error(config_for(n, alpha)).r_empirical;
                CHECK(e < 4.0 / n);
            }
            const double mid = empirical_error(config_for(n, 0.5)).r_empirical;
            CHECK(mid < prev);
            prev = mid;
        }
    }

    SUBCASE("probe at F_p/2 halves the phase step") {
        auto c = config_for(5, 0.5);
        c.probe_freq_hz = kFp / 2.0;
        const auto r = empirical_error(c);
        CHECK(r.x == Approx(oracle::pi / 10).epsilon(1e-14));
        CHECK(r.r_empirical == Approx(oracle::midpoint_error_k1(oracle::pi / 10)).epsilon(1e-6));
    }

    SUBCASE("second order probe") {
        // k = 2 difference compared at t + dt, the centre of its stencil:
        // estimate / exact = (sin(x/2) / (x/2))^2.
        SimConfig c = default_config(2, 8, kFp);
        c.alpha = 0.5;
        const double x = oracle::pi / 8;
        const double expected = std::abs(1.0 - std::pow(std::sin(x / 2) / (x / 2), 2));
        CHECK(empirical_error(c).r_empirical == Approx(expected).epsilon(1e-6));
    }
}

TEST_CASE("SimConfig validation") {
    auto c = config_for(1, 0.5); // x = pi, aliased
    CHECK_THROWS_AS(empirical_error(c), InvalidArgument);

    c = config_for(5, 0.5);
    c.grid = 32;
    CHECK_THROWS_AS(validate(c), InvalidArgument);
    c = config_for(5, 1.5);
    CHECK_THROWS_AS(validate(c), InvalidArgument);
    c = config_for(5, 0.5);
    c.order_k = 0;
    CHECK_THROWS_AS(validate(c), InvalidArgument);
    c = config_for(5, 0.5);
    c.periods = 0;
    CHECK_THROWS_AS(validate(c), InvalidArgument);
    CHECK_NOTHROW(validate(config_for(2, 0.5)));
}

TEST_CASE("residual_trace matches the report") {
    const auto c = config_for(5, 0.5);
    const auto trace = residual_trace(c);
    REQUIRE(trace.size() == static_cast<std::size_t>(c.periods * c.grid + 1));
    for (const auto& s : trace)
        CHECK(s.residual == s.v_est - s.exact);

    // Trapezoid mean squares over the trace reproduce r_empirical.
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < trace.size(); ++i) {
        const double w = (i == 0 || i + 1 == trace.size()) ? 0.5 : 1.0;
        num += w * trace[i].residual * trace[i].residual;
        den += w * trace[i].exact * trace[i].exact;
    }
    CHECK(std::sqrt(num / den) == Approx(empirical_error(c).r_empirical).epsilon(1e-12));
}

TEST_CASE("alias_frequency") {
    const double f = 1000.0;
    CHECK(alias_frequency(0.3 * f, f) == 0.3 * f);
    CHECK(alias_frequency(0.9 * f, f) == Approx(0.1 * f).epsilon(1e-12));
    CHECK(alias_frequency(4560.0, 8000.0) == 3440.0);
    CHECK(alias_frequency(0.0, 8000.0) == 0.0);
    CHECK(alias_frequency(8000.0, 8000.0) == 0.0);
    CHECK_THROWS_AS(alias_frequency(10.0, 0.0), InvalidArgument);
    CHECK_THROWS_AS(alias_frequency(-1.0, 10.0), InvalidArgument);
}

TEST_CASE("decimate") {
    std::vector<Sample> s;
    for (int i = 0; i < 10; ++i)
        s.push_back({i * 0.1, static_cast<double>(i)});

    CHECK(decimate(s, 1) == s);

    const auto five = decimate(s, 5);
    REQUIRE(five.size() == 2);
    CHECK(five[0] == s[0]);
    CHECK(five[1] == s[5]);

    CHECK(decimate(std::vector<Sample>{}, 3).empty());
    CHECK_THROWS_AS(decimate(s, 0), InvalidArgument);

    auto jitter = s;
    jitter[4].t += 0.01;
    CHECK_THROWS_AS(decimate(jitter, 2), InvalidArgument);
}

TEST_CASE("decimating a 45.6 kHz stream by 5 yields 9.12 kHz") {
    const double rate = 45600.0;
    std::vector<Sample> s;
    for (int i = 0; i < 4560; ++i)
        s.push_back({i / rate, std::cos(2.0 * oracle::pi * 2000.0 * i / rate)});
    const auto out = decimate(s, 5);
    REQUIRE(out.size() == 912);
    CHECK(1.0 / (out[1].t - out[0].t) == Approx(9120.0).epsilon(1e-9));
}

// ---------------------------------------------------------------- properties

TEST_CASE("property: simulator agrees with the k = 1 closed form") {
    for (int n : {4, 5, 10, 20})
        for (double alpha : {0.0, 0.5, 1.0}) {
            const auto r = empirical_error(config_for(n, alpha));
            CHECK(std::abs(r.r_empirical - closed_form_error_k1(oracle::pi / n, alpha)) < 1e-6);
        }
}

TEST_CASE("property: finite differences are exact on degree-k monomials") {
    for (int k = 1; k <= 4; ++k) {
        const double dt = 1e-2;
        const TimeFunction probe = [k](double t) { return std::pow(t, k); };
        const TimeFunction exact = [k](double) { return oracle::factorial(k); };
        const double e = relative_rms_error(probe, exact, k, dt, 0.5, -0.05, 0.1, 257);
        CHECK(e < 1e-10);
    }
}

TEST_CASE("property: empirical error is phase invariant") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> phase(-oracle::pi, oracle::pi);
    for (double alpha : {0.0, 0.5, 1.0}) {
        auto c = config_for(7, alpha);
        const double base = empirical_error(c).r_empirical;
        for (int i = 0; i < 10; ++i) {
            c.probe_phase_rad = phase(rng);
            CHECK(std::abs(empirical_error(c).r_empirical - base) < 1e-8);
        }
    }
}

TEST_CASE("property: alias folding is idempotent") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(0.0, 50.0);
    for (double fs : {1.0, 1e3, 1e6, 8000.0})
        for (int i = 0; i < 200; ++i) {
            const double f = u(rng) * fs;
            const double a = alias_frequency(f, fs);
            CHECK(a >= 0.0);
            CHECK(a <= fs / 2.0);
            CHECK(alias_frequency(a, fs) == a);
            CHECK(a == Approx(oracle::fold(f, fs)).epsilon(1e-9).scale(fs));
        }
}

TEST_CASE("property: midpoint gap is negative for every N >= 2") {
    for (int n = 2; n <= 60; ++n)
        CHECK(empirical_error(config_for(n, 0.5)).gap < 0.0);
}

} // TEST_SUITE
