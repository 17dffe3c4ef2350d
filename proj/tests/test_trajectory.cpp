#include <doctest.h>

#include <cmath>

#include "qsg/deflection.hpp"
#include "qsg/error.hpp"
#include "qsg/trajectory.hpp"

using namespace qsg;

TEST_SUITE("trajectory") {

TEST_CASE("kinematics") {
  const PhysicalParams p = preset_params();
  const NaturalUnits u = derive_length_unit(p, kPresetTau);
  const DeflectionEstimate e = estimate(p, kPresetTau, 1e3, -2.0, 0.65);
  CHECK(e.length_unit == doctest::Approx(u.length));
  CHECK(e.region_width == doctest::Approx(0.65 * u.length));
  CHECK(e.avg_acceleration == doctest::Approx(-2.0 * u.length / (1e-6)));
  CHECK(e.interaction_time == doctest::Approx(e.region_width / 1e3));
  CHECK(e.deflection ==
        doctest::Approx(0.5 * 2.0 * u.acceleration() * e.interaction_time * e.interaction_time));
  CHECK(e.direction == -1);
  CHECK(estimate(p, kPresetTau, 1e3, 2.0, 0.65).direction == 1);
}

TEST_CASE("zero acceleration and speed scaling") {
  const PhysicalParams p = preset_params();
  const DeflectionEstimate still = estimate(p, kPresetTau, 1e3, 0.0, 0.65);
  CHECK(still.deflection == 0.0);
  CHECK(still.direction == 0);
  const double d1 = estimate(p, kPresetTau, 1e3, -2.2, 0.65).deflection;
  const double d2 = estimate(p, kPresetTau, 2e3, -2.2, 0.65).deflection;
  CHECK(d1 / d2 == doctest::Approx(4.0).epsilon(1e-14));
}

TEST_CASE("preset lands in the expected bands") {
  const PhysicalParams p = preset_params();
  const DeflectionEstimate e = estimate(p, kPresetTau, kPresetSpeed, -2.22, 0.65);
  CHECK(e.deflection > 1e-16);
  CHECK(e.deflection < 1e-14);
  CHECK(e.interaction_time > 1e-9);
  CHECK(e.interaction_time < 1e-7);
}

TEST_CASE("the choice of tau does not change physical answers") {
  // Same physical geometry described in two unit systems (tau and 4 tau).
  const PhysicalParams p = preset_params();
  const double tau1 = kPresetTau, tau2 = 4 * kPresetTau;
  const double l1 = derive_length_unit(p, tau1).length;
  const double l2 = derive_length_unit(p, tau2).length;
  const double s = l1 / l2;
  const SpinState uu = basis_state(Spin::up, Spin::up);
  const auto a_at = [&](double scale) {
    const WavePacket packet{{0, 0.1 * scale, 0.4 * scale}, 0.001 * scale, PacketProfile::square};
    return contract_force(uu, moments(packet, force_moment_keys())).a_z;
  };
  const DeflectionEstimate e1 = estimate(p, tau1, 1e3, a_at(1.0), 0.65);
  const DeflectionEstimate e2 = estimate(p, tau2, 1e3, a_at(s), 0.65 * s);
  CHECK(e2.region_width == doctest::Approx(e1.region_width).epsilon(1e-12));
  CHECK(e2.avg_acceleration == doctest::Approx(e1.avg_acceleration).epsilon(0.01));
  CHECK(e2.deflection == doctest::Approx(e1.deflection).epsilon(0.01));
}

TEST_CASE("spot separation") {
  CHECK(separation_vs_packet(1e-15, 1e-10) == doctest::Approx(2e-5));
  CHECK(separation_vs_packet(-1e-15, 1e-10) == doctest::Approx(2e-5));
  CHECK_THROWS_AS(separation_vs_packet(1e-15, 0.0), ValidationError);
}

TEST_CASE("validation and serialization") {
  const PhysicalParams p = preset_params();
  CHECK_THROWS_AS(estimate(p, kPresetTau, 0.0, -2.0, 0.65), ValidationError);
  CHECK_THROWS_AS(estimate(p, kPresetTau, 1e3, -2.0, 0.0), ValidationError);
  CHECK_THROWS_AS(estimate(p, -1.0, 1e3, -2.0, 0.65), ValidationError);
  const auto j = to_json(estimate(p, kPresetTau, 1e3, -2.0, 0.65));
  for (const char* key : {"length_unit_m", "interaction_time_s", "deflection_m", "direction"}) {
    CHECK(j.contains(key));
  }
  CHECK(j["direction"] == -1);
}

}  // TEST_SUITE
