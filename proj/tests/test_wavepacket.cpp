#include <doctest.h>

#include <cmath>

#include "qsg/error.hpp"
#include "qsg/wavepacket.hpp"

using namespace qsg;

namespace {

// Midpoint Riemann sum over the cube of a square packet, n^3 cells.
double riemann_moment(const WavePacket& p, const MomentKey& k, int n) {
  const double h = p.width / n;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = p.center.x - 0.5 * p.width + (i + 0.5) * h;
    for (int j = 0; j < n; ++j) {
      const double y = p.center.y - 0.5 * p.width + (j + 0.5) * h;
      for (int l = 0; l < n; ++l) {
        const double z = p.center.z - 0.5 * p.width + (l + 0.5) * h;
        const double r = std::sqrt(x * x + y * y + z * z);
        sum += std::pow(x, k.a) * std::pow(y, k.b) * std::pow(z, k.c) / std::pow(r, k.n);
      }
    }
  }
  return sum / (double(n) * n * n);
}

}  // namespace

TEST_SUITE("wavepacket") {

TEST_CASE("on-axis moment against a Riemann sum") {
  const WavePacket p{{0, 0, 0.4}, 0.001, PacketProfile::square};
  const MomentKey k{0, 0, 1, 5};
  const double q = moment(p, k);
  CHECK(q == doctest::Approx(riemann_moment(p, k, 100)).epsilon(1e-9));
  CHECK(q == doctest::Approx(39.0625).epsilon(1e-4));
}

TEST_CASE("off-axis moments against a Riemann sum") {
  const WavePacket p{{0.12, -0.2, 0.3}, 0.01, PacketProfile::square};
  for (const MomentKey& k : force_moment_keys()) {
    CHECK(moment(p, k) == doctest::Approx(riemann_moment(p, k, 60)).epsilon(1e-6));
  }
}

TEST_CASE("normalization") {
  for (PacketProfile prof : {PacketProfile::square, PacketProfile::gaussian}) {
    const WavePacket p{{0.1, 0.2, 0.4}, 0.01, prof};
    CHECK(moment(p, {0, 0, 0, 0}) == doctest::Approx(1.0).epsilon(1e-12));
  }
  const WavePacket sq{{0, 0, 0.4}, 0.02, PacketProfile::square};
  // uniform cube: <z^2> = z0^2 + w^2 / 12
  CHECK(moment(sq, {0, 0, 2, 0}) == doctest::Approx(0.16 + 0.0004 / 12).epsilon(1e-12));
  const WavePacket g{{0, 0, 0.4}, 0.01, PacketProfile::gaussian};
  CHECK(moment(g, {0, 0, 2, 0}) == doctest::Approx(0.16 + 1e-4).epsilon(1e-7));
}

TEST_CASE("odd moments vanish on the symmetry plane") {
  const WavePacket p{{0, 0.1, 0.4}, 0.001, PacketProfile::square};
  CHECK(std::abs(moment(p, {1, 0, 0, 5})) < 1e-12);
  CHECK(std::abs(moment(p, {1, 1, 1, 7})) < 1e-12);
  CHECK(std::abs(moment(p, {0, 1, 0, 5})) > 1.0);
}

TEST_CASE("finite width correction is quadratic") {
  const Position3 c{0.05, 0.1, 0.4};
  const MomentKey keys[] = {{0, 0, 3, 7}};
  const double point = point_moments(c, keys).at(keys[0]);
  const double d3 = moment({c, 1e-2, PacketProfile::square}, keys[0]) - point;
  const double d2 = moment({c, 1e-3, PacketProfile::square}, keys[0]) - point;
  CHECK(d3 / d2 == doctest::Approx(100.0).epsilon(0.02));
  CHECK(std::abs(d2 / point) < 1e-4);
}

TEST_CASE("quadrature refinement") {
  const WavePacket p{{0.1, 0.1, 0.3}, 0.05, PacketProfile::square};
  const auto keys = force_moment_keys();
  QuadratureReport rep;
  const SpatialMoments m = moments(p, keys, &rep);
  CHECK(rep.order >= 8);
  CHECK(rep.max_rel_change < 1e-10);
  const SpatialMoments fixed = moments_fixed_order(p, keys, rep.order);
  for (const auto& k : keys) CHECK(m.at(k) == fixed.at(k));
  const SpatialMoments coarse = moments_fixed_order(p, keys, rep.order / 2);
  for (const auto& k : keys) {
    CHECK(coarse.at(k) == doctest::Approx(m.at(k)).epsilon(1e-9));
  }
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(moment({{0, 0, 0.0005}, 0.001, PacketProfile::square}, {0, 0, 1, 5}),
                  NumericalError);
  CHECK_THROWS_AS(moment({{0, 0, 0.05}, 0.01, PacketProfile::gaussian}, {0, 0, 1, 5}),
                  NumericalError);
  CHECK_THROWS_AS(moment({{0, 0, 0.4}, 0.0, PacketProfile::square}, {0, 0, 1, 5}),
                  ValidationError);
  CHECK_THROWS_AS(moment({{0, 0, 0.4}, 0.001, PacketProfile::square}, {-1, 0, 0, 0}),
                  ValidationError);
  SpatialMoments empty;
  CHECK_THROWS_WITH_AS(empty.at({0, 0, 1, 5}), "missing moment tuple (0,0,1,5)",
                       ValidationError);
  const MomentKey k[] = {{0, 0, 1, 5}};
  CHECK_THROWS_AS(point_moments(Position3{}, k), NumericalError);
}

}  // TEST_SUITE
