#pragma once

// Spatial expectation values <x^a y^b z^c / r^n> over a wavepacket
// probability density, by tensor-product Gauss-Legendre quadrature.

#include <compare>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "qsg/dipole.hpp"

namespace qsg {

enum class PacketProfile {
  /// Uniform probability density over a cube of edge `width`.
  square,
  /// Isotropic Gaussian density with per-axis standard deviation `width`,
  /// truncated to +/- kGaussianCutoff standard deviations.
  gaussian,
};

inline constexpr double kGaussianCutoff = 6.0;

struct WavePacket {
  Position3 center;
  double width = 0.001;
  PacketProfile profile = PacketProfile::square;

  /// Half edge of the cube that carries all of the probability.
  double support_half_width() const;
  /// Throws ValidationError for non-positive width, NumericalError
  /// ("singular support") if the support cube can reach the origin.
  void validate() const;
  /// Unnormalized probability density; used by the grid initializer.
  double density(double x, double y, double z) const;
};

struct MomentKey {
  int a = 0;
  int b = 0;
  int c = 0;
  int n = 0;

  auto operator<=>(const MomentKey&) const = default;
  std::string str() const;
};

class SpatialMoments {
 public:
  void set(const MomentKey& key, double value) { values_[key] = value; }
  bool contains(const MomentKey& key) const { return values_.count(key) != 0; }
  /// Throws ValidationError naming the missing tuple.
  double at(const MomentKey& key) const;
  const std::map<MomentKey, double>& values() const { return values_; }

 private:
  std::map<MomentKey, double> values_;
};

struct QuadratureReport {
  int order = 0;               // points per axis of the accepted rule
  double max_rel_change = 0.0; // vs. the previous (half-order) rule
};

/// One moment. Order is doubled from 4 until successive results agree to
/// tol::quadrature_rel relative to the integral of |integrand|.
double moment(const WavePacket& packet, const MomentKey& key);

/// Several moments sharing the quadrature nodes.
SpatialMoments moments(const WavePacket& packet, std::span<const MomentKey> keys,
                       QuadratureReport* report = nullptr);

/// The same moments evaluated with a fixed rule of `order` points per axis.
SpatialMoments moments_fixed_order(const WavePacket& packet, std::span<const MomentKey> keys,
                                   int order);

/// Every tuple the force contraction can ask for.
std::vector<MomentKey> force_moment_keys();

/// Moments of a point particle at `at` (the zero-width limit).
SpatialMoments point_moments(const Position3& at, std::span<const MomentKey> keys);

}  // namespace qsg
