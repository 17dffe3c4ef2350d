#include "qsg/wavepacket.hpp"

#include <gsl/gsl_integration.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>

#include "qsg/error.hpp"
#include "qsg/tolerances.hpp"

namespace qsg {

namespace {

constexpr int kMinOrder = 4;
constexpr int kMaxOrder = 128;

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;  // sum to 2
};

const GaussRule& gauss_rule(int order) {
  static std::mutex mutex;
  static std::map<int, GaussRule> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(order);
  if (it != cache.end()) return it->second;

  std::unique_ptr<gsl_integration_glfixed_table, decltype(&gsl_integration_glfixed_table_free)>
      table(gsl_integration_glfixed_table_alloc(order), &gsl_integration_glfixed_table_free);
  if (!table) throw NumericalError("could not build Gauss-Legendre rule");
  GaussRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  for (int i = 0; i < order; ++i) {
    gsl_integration_glfixed_point(-1.0, 1.0, static_cast<std::size_t>(i), &rule.nodes[i],
                                  &rule.weights[i], table.get());
  }
  return cache.emplace(order, std::move(rule)).first->second;
}

void validate_key(const MomentKey& k) {
  if (k.a < 0 || k.b < 0 || k.c < 0 || k.n < 0) {
    throw ValidationError("moment exponents must be non-negative: " + k.str());
  }
}

struct Integrals {
  std::vector<double> value;
  std::vector<double> magnitude;  // integral of |integrand|, the convergence scale
};

// Per-axis 1-D density factors at the quadrature nodes, normalized so that
// the tensor-product sum of weights * factors is one.
std::vector<double> axis_weights(const WavePacket& p, const GaussRule& rule) {
  std::vector<double> w(rule.nodes.size());
  if (p.profile == PacketProfile::square) {
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = 0.5 * rule.weights[i];
    return w;
  }
  const double norm = std::erf(kGaussianCutoff / std::numbers::sqrt2);
  for (std::size_t i = 0; i < w.size(); ++i) {
    const double u = rule.nodes[i] * kGaussianCutoff;
    const double pdf = std::exp(-0.5 * u * u) / std::sqrt(2.0 * std::numbers::pi);
    // du = cutoff * dnode; density in u is pdf / norm
    w[i] = rule.weights[i] * kGaussianCutoff * pdf / norm;
  }
  return w;
}

Integrals integrate(const WavePacket& p, std::span<const MomentKey> keys, int order) {
  const GaussRule& rule = gauss_rule(order);
  const std::vector<double> w = axis_weights(p, rule);
  const double h = p.support_half_width();

  int max_a = 0, max_b = 0, max_c = 0, max_n = 0;
  for (const auto& k : keys) {
    max_a = std::max(max_a, k.a);
    max_b = std::max(max_b, k.b);
    max_c = std::max(max_c, k.c);
    max_n = std::max(max_n, k.n);
  }
  auto powers = [](double v, int max_e) {
    std::vector<double> out(max_e + 1, 1.0);
    for (int e = 1; e <= max_e; ++e) out[e] = out[e - 1] * v;
    return out;
  };

  Integrals acc{std::vector<double>(keys.size(), 0.0), std::vector<double>(keys.size(), 0.0)};
  for (int i = 0; i < order; ++i) {
    const double x = p.center.x + h * rule.nodes[i];
    const auto px = powers(x, max_a);
    for (int j = 0; j < order; ++j) {
      const double y = p.center.y + h * rule.nodes[j];
      const auto py = powers(y, max_b);
      const double wij = w[i] * w[j];
      for (int k = 0; k < order; ++k) {
        const double z = p.center.z + h * rule.nodes[k];
        const auto pz = powers(z, max_c);
        const double inv_r = 1.0 / std::sqrt(x * x + y * y + z * z);
        const auto pr = powers(inv_r, max_n);
        const double weight = wij * w[k];
        for (std::size_t q = 0; q < keys.size(); ++q) {
          const MomentKey& key = keys[q];
          const double f = px[key.a] * py[key.b] * pz[key.c] * pr[key.n];
          acc.value[q] += weight * f;
          acc.magnitude[q] += weight * std::abs(f);
        }
      }
    }
  }
  return acc;
}

}  // namespace

double WavePacket::support_half_width() const {
  return profile == PacketProfile::square ? 0.5 * width : kGaussianCutoff * width;
}

void WavePacket::validate() const {
  if (!(width > 0.0) || !std::isfinite(width)) {
    throw ValidationError("wavepacket width must be positive");
  }
  if (!(center.norm() > std::sqrt(3.0) * support_half_width())) {
    throw NumericalError("singular support: wavepacket cube touches the origin");
  }
}

double WavePacket::density(double x, double y, double z) const {
  const double dx = x - center.x, dy = y - center.y, dz = z - center.z;
  if (profile == PacketProfile::square) {
    const double h = 0.5 * width;
    return (std::abs(dx) <= h && std::abs(dy) <= h && std::abs(dz) <= h) ? 1.0 : 0.0;
  }
  return std::exp(-(dx * dx + dy * dy + dz * dz) / (2.0 * width * width));
}

std::string MomentKey::str() const {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "," +
         std::to_string(n) + ")";
}

double SpatialMoments::at(const MomentKey& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) throw ValidationError("missing moment tuple " + key.str());
  return it->second;
}

SpatialMoments moments(const WavePacket& packet, std::span<const MomentKey> keys,
                       QuadratureReport* report) {
  packet.validate();
  for (const auto& k : keys) validate_key(k);

  Integrals previous = integrate(packet, keys, kMinOrder);
  for (int order = 2 * kMinOrder; order <= kMaxOrder; order *= 2) {
    Integrals current = integrate(packet, keys, order);
    double worst = 0.0;
    for (std::size_t q = 0; q < keys.size(); ++q) {
      const double scale = std::max(std::abs(current.value[q]), current.magnitude[q]);
      const double change = std::abs(current.value[q] - previous.value[q]);
      worst = std::max(worst, scale > 0.0 ? change / scale : change);
    }
    if (worst < tol::quadrature_rel) {
      SpatialMoments out;
      for (std::size_t q = 0; q < keys.size(); ++q) out.set(keys[q], current.value[q]);
      if (report) *report = {order, worst};
      return out;
    }
    previous = std::move(current);
  }
  throw NumericalError("moment quadrature did not converge by order " + std::to_string(kMaxOrder));
}

double moment(const WavePacket& packet, const MomentKey& key) {
  const MomentKey keys[] = {key};
  return moments(packet, keys).at(key);
}

SpatialMoments moments_fixed_order(const WavePacket& packet, std::span<const MomentKey> keys,
                                   int order) {
  packet.validate();
  for (const auto& k : keys) validate_key(k);
  if (order < 1) throw ValidationError("quadrature order must be positive");
  const Integrals r = integrate(packet, keys, order);
  SpatialMoments out;
  for (std::size_t q = 0; q < keys.size(); ++q) out.set(keys[q], r.value[q]);
  return out;
}

std::vector<MomentKey> force_moment_keys() {
  return {{1, 0, 0, 5}, {0, 1, 0, 5}, {0, 0, 1, 5}, {2, 0, 1, 7}, {0, 2, 1, 7},
          {0, 0, 3, 7}, {1, 1, 1, 7}, {1, 0, 2, 7}, {0, 1, 2, 7}};
}

SpatialMoments point_moments(const Position3& at, std::span<const MomentKey> keys) {
  const double r = at.norm();
  if (!(r > 0.0)) throw NumericalError("singular support: point at the origin");
  SpatialMoments out;
  for (const auto& k : keys) {
    validate_key(k);
    out.set(k, std::pow(at.x, k.a) * std::pow(at.y, k.b) * std::pow(at.z, k.c) /
                   std::pow(r, k.n));
  }
  return out;
}

}  // namespace qsg
