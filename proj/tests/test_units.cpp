#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qsg/error.hpp"
#include "qsg/units.hpp"

using namespace qsg;

TEST_SUITE("units") {

TEST_CASE("length unit makes the dipole prefactor one") {
  const PhysicalParams p = preset_params();
  const NaturalUnits u = derive_length_unit(p, kPresetTau);
  // mu0 |alpha beta| hbar^2 / m in units of l^5 / tau^2
  const double g = p.mu0 * std::abs(p.alpha * p.beta) * p.hbar * p.hbar / p.mass;
  CHECK(g * u.time * u.time / std::pow(u.length, 5) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(u.length > 3e-6);
  CHECK(u.length < 3e-5);
  CHECK(p.coupling_sign() == 1.0);
}

TEST_CASE("scaling with tau and alpha") {
  PhysicalParams p = preset_params();
  const double l1 = derive_length_unit(p, 1e-3).length;
  CHECK(derive_length_unit(p, 2e-3).length / l1 ==
        doctest::Approx(std::pow(2.0, 0.4)).epsilon(1e-13));
  p.alpha *= 32.0;
  CHECK(derive_length_unit(p, 1e-3).length / l1 == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("kinetic scale") {
  const PhysicalParams p = preset_params();
  const NaturalUnits u = derive_length_unit(p, kPresetTau);
  const double kappa = kinetic_scale(p, u);
  CHECK(kappa == doctest::Approx(p.hbar * u.time / (u.mass * u.length * u.length)));
  CHECK(kappa > 0.5);
  CHECK(kappa < 1.5);
}

TEST_CASE("loop and particle ratios") {
  // I pi R^2 = beta hbar / 2 for a 1 uA, 1 um loop: 2 pi 1e-18 / hbar.
  CHECK(beta_from_loop(1e-6, 1e-6) == doctest::Approx(5.9580e16).epsilon(1e-4));
  CHECK(electron_gyromagnetic_ratio() == doctest::Approx(-8.7941e10).epsilon(1e-4));
  const PhysicalParams p = preset_params();
  CHECK(p.beta / p.alpha > 2e5);
  CHECK(p.beta / p.alpha < 2e6);
  // Half a flux quantum through the loop.
  CHECK(p.B0 * std::numbers::pi * 1e-12 == doctest::Approx(0.5 * codata::flux_quantum));
  CHECK_THROWS_AS(beta_from_loop(0.0, 1e-6), ValidationError);
  CHECK_THROWS_AS(beta_from_loop(1e-6, -1.0), ValidationError);
}

TEST_CASE("thermal speed") {
  // sqrt(3 * 1.380649e-23 * 373.15 / 1.67262e-27) by hand: 3039.5 m/s
  CHECK(thermal_speed(373.15, codata::proton_mass) == doctest::Approx(3039.5).epsilon(1e-4));
  CHECK(thermal_speed(4 * 373.15, codata::proton_mass) ==
        doctest::Approx(2 * thermal_speed(373.15, codata::proton_mass)));
  CHECK_THROWS_AS(thermal_speed(0.0, 1.0), ValidationError);
}

TEST_CASE("dimension round trip") {
  const NaturalUnits u = derive_length_unit(preset_params(), kPresetTau);
  for (const char* tag : {"length", "time", "velocity", "acceleration", "energy", "force"}) {
    const Dimension d = parse_dimension(tag);
    CHECK(from_natural(to_natural(1.2345e-7, d, u), d, u) ==
          doctest::Approx(1.2345e-7).epsilon(1e-14));
  }
  CHECK(to_natural(u.length, Dimension::length, u) == doctest::Approx(1.0));
  CHECK(from_natural(1.0, Dimension::acceleration, u) ==
        doctest::Approx(u.length / (u.time * u.time)));
  CHECK(from_natural(1.0, Dimension::force, u) ==
        doctest::Approx(u.mass * u.length / (u.time * u.time)));
  CHECK_THROWS_WITH_AS(parse_dimension("charge"), "unknown dimension tag: charge",
                       ValidationError);
}

TEST_CASE("validation") {
  PhysicalParams p = preset_params();
  CHECK_NOTHROW(p.validate());
  CHECK_THROWS_AS(derive_length_unit(p, 0.0), ValidationError);
  p.alpha = 0.0;
  CHECK_THROWS_AS(p.validate(), ValidationError);
  p = preset_params();
  p.mass = -1.0;
  CHECK_THROWS_AS(derive_length_unit(p, 1e-3), ValidationError);
  p = preset_params();
  p.B0 = NAN;
  CHECK_THROWS_AS(p.validate(), ValidationError);
}

}  // TEST_SUITE
