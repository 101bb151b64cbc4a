#include "oracles.hpp"

#include "quantplan/error.hpp"
#include "quantplan/filter_model.hpp"

#include <doctest.h>

#include <cmath>

using namespace quantplan;
using doctest::Approx;

TEST_SUITE("filter_model") {

TEST_CASE("RcCascade invariants") {
    CHECK_THROWS_AS(RcCascade(0, 1.0), InvalidArgument);
    CHECK_THROWS_AS(RcCascade(1, 0.0), InvalidArgument);
    CHECK_THROWS_AS(RcCascade(1, -1e-3), InvalidArgument);
    CHECK_THROWS_AS(RcCascade(1, std::nan("")), InvalidArgument);
    const RcCascade f(3, 1e-4);
    CHECK(f.links() == 3);
    CHECK(f.time_constant_s() == 1e-4);
}

TEST_CASE("power_response") {
    CHECK(power_response(RcCascade(2, 1e-3), 0.0) == 1.0);
    CHECK(power_response(RcCascade(5, 7.0), 0.0) == 1.0);

    // links = 1 at 2*pi*f*T = 1.
    CHECK(power_response(RcCascade(1, 1.0 / (2.0 * oracle::pi)), 1.0) == Approx(0.5).epsilon(1e-15));

    // links = 2 at 2*pi*f*T = sqrt(sqrt(2) - 1).
    const double x = std::sqrt(std::sqrt(2.0) - 1.0);
    CHECK(x == Approx(0.6436).epsilon(1e-4));
    CHECK(power_response(RcCascade(2, x / (2.0 * oracle::pi)), 1.0) == Approx(0.5).epsilon(1e-14));

    CHECK_THROWS_AS(power_response(RcCascade(1, 1.0), -1.0), InvalidArgument);
}

TEST_CASE("solve_time_constant") {
    CHECK(solve_time_constant(2, 2000.0) == Approx(5.12e-5).epsilon(0.005));
    CHECK(solve_time_constant(1, 1.0 / (2.0 * oracle::pi)) == Approx(1.0).epsilon(1e-15));

    const double t4 = solve_time_constant(4, 1000.0);
    CHECK(t4 == Approx(std::sqrt(std::pow(2.0, 0.25) - 1.0) / (2.0 * oracle::pi * 1000.0)).epsilon(1e-15));
    CHECK(t4 == Approx(oracle::bisect_time_constant(4, 1000.0)).epsilon(1e-12));

    CHECK(RcCascade(4, t4).half_power_hz() == Approx(1000.0).epsilon(1e-14));
    CHECK_THROWS_AS(solve_time_constant(2, 0.0), InvalidArgument);
    CHECK_THROWS_AS(solve_time_constant(2, -5.0), InvalidArgument);
    CHECK_THROWS_AS(solve_time_constant(0, 5.0), InvalidArgument);
}

TEST_CASE("solve_cutoff") {
    const RcCascade example(2, 5.12e-5);

    SUBCASE("level 0.1 of power") {
        const double fs = solve_cutoff(example, 0.1, LevelDomain::power);
        CHECK(fs == Approx(oracle::closed_form_cutoff(2, 5.12e-5, 0.1)).epsilon(1e-9));
        CHECK(fs == Approx(4571.0).epsilon(1e-3));
        CHECK(2.0 * oracle::pi * fs * 5.12e-5 == Approx(std::sqrt(std::sqrt(10.0) - 1.0)).epsilon(1e-9));
    }

    SUBCASE("level 0.01 of power") {
        const double fs = solve_cutoff(example, 0.01, LevelDomain::power);
        CHECK(fs == Approx(oracle::closed_form_cutoff(2, 5.12e-5, 0.01)).epsilon(1e-9));
        CHECK(2.0 * oracle::pi * fs * 5.12e-5 == Approx(3.0).epsilon(1e-9));
        CHECK(fs == Approx(9325.5).epsilon(1e-3)); // (1 + x^2)^2 = 100 gives x = 3
    }

    SUBCASE("single-section half-power point") {
        CHECK(solve_cutoff(RcCascade(1, 1.0 / (2.0 * oracle::pi)), 0.5, LevelDomain::power) ==
              Approx(1.0).epsilon(1e-9));
    }

    SUBCASE("amplitude domain squares the level") {
        CHECK(solve_cutoff(example, 0.1, LevelDomain::amplitude) ==
              Approx(solve_cutoff(example, 0.01, LevelDomain::power)).epsilon(1e-10));
    }

    SUBCASE("cutoff above half-power when level < 1/2") {
        for (double level : {0.4, 0.1, 1e-3})
            CHECK(solve_cutoff(example, level, LevelDomain::power) > example.half_power_hz());
    }

    SUBCASE("errors") {
        CHECK_THROWS_AS(solve_cutoff(example, 0.0, LevelDomain::power), InvalidArgument);
        CHECK_THROWS_AS(solve_cutoff(example, 1.0, LevelDomain::power), InvalidArgument);
        CHECK_THROWS_AS(solve_cutoff(example, -0.5, LevelDomain::amplitude), InvalidArgument);
        // Response never drops below 1e-30 inside the bracket for one link.
        CHECK_THROWS_AS(solve_cutoff(RcCascade(1, 1.0), 1e-30, LevelDomain::power), NumericalError);
        // Response is essentially 1 at f_half / 1e6.
        CHECK_THROWS_AS(solve_cutoff(RcCascade(1, 1.0), 1.0 - 1e-15, LevelDomain::power), NumericalError);
    }
}

TEST_CASE("level domain names") {
    CHECK(parse_level_domain("Power") == LevelDomain::power);
    CHECK(parse_level_domain("AMPLITUDE") == LevelDomain::amplitude);
    CHECK(to_string(LevelDomain::power) == "power");
    CHECK_THROWS_AS(parse_level_domain("db"), InvalidArgument);
}

// ---------------------------------------------------------------- properties

TEST_CASE("property: response strictly decreases on a log grid") {
    for (int links : {1, 2, 5}) {
        const RcCascade f(links, 5.12e-5);
        double prev = power_response(f, 0.0);
        for (int i = 0; i <= 120; ++i) {
            const double freq = std::pow(10.0, -1.0 + i * 0.05);
            const double r = power_response(f, freq);
            CHECK(r < prev);
            prev = r;
        }
    }
}

TEST_CASE("property: cutoff inverts the response") {
    const RcCascade f(2, 5.12e-5);
    for (int i = 0; i <= 30; ++i) {
        const double target = std::pow(10.0, 2.0 + i * 0.1); // 100 Hz .. 100 kHz
        const double level = power_response(f, target);
        if (!(level < 1.0))
            continue;
        CHECK(solve_cutoff(f, level, LevelDomain::power) == Approx(target).epsilon(1e-8));
    }
}

TEST_CASE("property: cascades compose multiplicatively") {
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b)
            for (double freq : {10.0, 2000.0, 4.56e3, 1e5}) {
                const double tau = 5.12e-5;
                const double whole = power_response(RcCascade(a + b, tau), freq);
                const double parts = power_response(RcCascade(a, tau), freq) *
                                     power_response(RcCascade(b, tau), freq);
                CHECK(oracle::close_rel(whole, parts, 1e-12));
            }
}

TEST_CASE("property: time constant round trip") {
    for (int links = 1; links <= 8; ++links)
        for (double f : {0.5, 60.0, 2000.0, 1e6}) {
            const RcCascade filter(links, solve_time_constant(links, f));
            CHECK(std::abs(power_response(filter, f) - 0.5) <= 1e-10);
        }
}

} // TEST_SUITE
