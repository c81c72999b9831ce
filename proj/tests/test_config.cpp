#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "fwm/config.hpp"
#include "fwm/errors.hpp"
#include "fwm/sweep.hpp"
#include "test_util.hpp"

using namespace fwm;
using fwm::test::hz;

TEST_CASE("defaults reproduce the base parameter set") {
    PhysicalConfig c;
    CHECK(c.gamma_big == doctest::Approx(hz(5.7e6)).epsilon(1e-14));
    CHECK(c.gamma_small == doctest::Approx(hz(10e3)).epsilon(1e-14));
    CHECK(c.omega_zero == doctest::Approx(hz(3e9)).epsilon(1e-14));
    CHECK(c.optical_depth == 150.0);
}

TEST_CASE("derive_constants: coupling is OD * Gamma / 4 exactly") {
    PhysicalConfig c;
    const DerivedConstants dc = derive_constants(c);
    CHECK(dc.coupling == 150.0 * c.gamma_big / 4.0);
}

TEST_CASE("derive_constants: tau collapses to 2 Gamma^2 with no pump or detunings") {
    PhysicalConfig c;
    c.omega_rabi = 0;
    c.delta_big = 0;
    c.omega_zero = 0;
    const DerivedConstants dc = derive_constants(c);
    CHECK(dc.tau == doctest::Approx(2 * c.gamma_big * c.gamma_big).epsilon(1e-15));
}

TEST_CASE("derive_constants: tau matches an independent regrouping of the sum") {
    // 4 w0^2 + 8 D^2 + 8 D w0 = 4 (w0 + D)^2 + 4 D^2
    PhysicalConfig c = fwm::test::fig_config("fig2");
    const DerivedConstants dc = derive_constants(c);
    const double g = c.gamma_big, w = c.omega_rabi, d = c.delta_big, w0 = c.omega_zero;
    const double regrouped = 2 * g * g + 4 * w * w + 4 * (w0 + d) * (w0 + d) + 4 * d * d;
    CHECK(dc.tau == doctest::Approx(regrouped).epsilon(1e-14));
    CHECK(dc.tau > 0);
}

TEST_CASE("tau stays positive for random valid configs") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> det(-hz(5e9), hz(5e9));
    std::uniform_real_distribution<double> pos(0.0, hz(5e9));
    for (int i = 0; i < 200; ++i) {
        PhysicalConfig c;
        c.omega_rabi = pos(rng);
        c.delta_big = det(rng);
        c.omega_zero = pos(rng);
        CHECK(derive_constants(c).tau > 0);
    }
}

TEST_CASE("validation rejects bad fields") {
    PhysicalConfig c;
    c.gamma_big = 0;
    CHECK_THROWS_AS(validate(c), ValidationError);

    c = PhysicalConfig();
    c.gamma_small = -1.0;
    CHECK_THROWS_AS(validate(c), ValidationError);

    c = PhysicalConfig();
    c.omega_rabi = std::nan("");
    CHECK_THROWS_AS(derive_constants(c), ValidationError);

    c = PhysicalConfig();
    c.optical_depth = -5;
    CHECK_THROWS_AS(validate(c), ValidationError);

    c = PhysicalConfig();
    c.length = 0;
    CHECK_THROWS_AS(validate(c), ValidationError);
}

TEST_CASE("internal-unit round trip reproduces every field") {
    PhysicalConfig c = fwm::test::fig_config("fig3b");
    c.delta_small = hz(-217e6);
    const PhysicalConfig back = from_internal(to_internal(c));
    CHECK(back.gamma_big == doctest::Approx(c.gamma_big).epsilon(1e-12));
    CHECK(back.gamma_small == doctest::Approx(c.gamma_small).epsilon(1e-12));
    CHECK(back.omega_rabi == doctest::Approx(c.omega_rabi).epsilon(1e-12));
    CHECK(back.delta_big == doctest::Approx(c.delta_big).epsilon(1e-12));
    CHECK(back.delta_small == doctest::Approx(c.delta_small).epsilon(1e-12));
    CHECK(back.omega_zero == doctest::Approx(c.omega_zero).epsilon(1e-12));
    CHECK(back.optical_depth == c.optical_depth);
    CHECK(back.length == doctest::Approx(c.length).epsilon(1e-12));
}

TEST_CASE("physics depends on the medium only through the optical depth") {
    // Rescaling the length at fixed OD must leave every observable unchanged.
    PhysicalConfig c = fwm::test::fig_config("fig3b");
    PhysicalConfig c2 = c;
    c2.length = c.length / 3.7;

    const SpectrumRecord a = evaluate_point(c, hz(1e6), true, 64);
    const SpectrumRecord b = evaluate_point(c2, hz(1e6), true, 64);
    CHECK(a.gain_a == doctest::Approx(b.gain_a).epsilon(1e-10));
    CHECK(a.gain_b == doctest::Approx(b.gain_b).epsilon(1e-10));
    CHECK(a.s_x_minus == doctest::Approx(b.s_x_minus).epsilon(1e-10));
    CHECK(a.s_p_plus == doctest::Approx(b.s_p_plus).epsilon(1e-10));
    CHECK(a.inseparability == doctest::Approx(b.inseparability).epsilon(1e-10));
}

TEST_CASE("config text parser applies 2 pi to the *_hz keys") {
    const PhysicalConfig c = parse_config_text(
        "# comment\n"
        "gamma_big_hz = 5.7e6\n"
        "omega_rabi_hz = 2e9   # inline comment\n"
        "delta_big_hz = 2e9\n"
        "delta_small_hz = -217e6\n"
        "optical_depth = 150\n"
        "length_m = 0.02\n");
    CHECK(c.gamma_big == doctest::Approx(hz(5.7e6)).epsilon(1e-14));
    CHECK(c.omega_rabi == doctest::Approx(hz(2e9)).epsilon(1e-14));
    CHECK(c.delta_small == doctest::Approx(hz(-217e6)).epsilon(1e-14));
    CHECK(c.optical_depth == 150.0);
    CHECK(c.length == 0.02);
    // unset keys keep the base defaults
    CHECK(c.omega_zero == doctest::Approx(hz(3e9)).epsilon(1e-14));
}

TEST_CASE("config text parser rejects unknown keys and bad numbers") {
    CHECK_THROWS_AS(parse_config_text("rabi_hz = 1e9\n"), ValidationError);
    CHECK_THROWS_AS(parse_config_text("omega_rabi_hz = fast\n"), ValidationError);
    CHECK_THROWS_AS(parse_config_text("omega_rabi_hz\n"), ValidationError);
}
