#include "qsg/dipole.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "qsg/error.hpp"

namespace qsg {

namespace {

struct EmbeddedGenerators {
  std::array<TwoSpinOperator, 3> particle;
  std::array<TwoSpinOperator, 3> loop;
  TwoSpinOperator dot;
};

const EmbeddedGenerators& generators() {
  static const EmbeddedGenerators g = [] {
    EmbeddedGenerators out;
    for (int i = 0; i < 3; ++i) {
      const SpinOperator s = spin_generator(kAxes[i]);
      out.particle[i] = embed(s, Slot::particle);
      out.loop[i] = embed(s, Slot::loop);
    }
    out.dot = spin_dot();
    return out;
  }();
  return g;
}

double checked_radius(const Position3& r) {
  const double n = r.norm();
  if (!(n > 0.0)) throw NumericalError("dipole singularity: operator evaluated at r = 0");
  return n;
}

TwoSpinOperator projected(const std::array<TwoSpinOperator, 3>& s, const Position3& r) {
  return s[0] * r.x + s[1] * r.y + s[2] * r.z;
}

}  // namespace

double Position3::norm() const { return std::sqrt(x * x + y * y + z * z); }

Eigen::Vector3d dipole_field(const Eigen::Vector3d& moment, const Eigen::Vector3d& at, double mu0) {
  const double r = at.norm();
  if (!(r > 0.0)) throw NumericalError("dipole singularity: field evaluated at the dipole");
  const Eigen::Vector3d u = at / r;
  return mu0 / (4.0 * std::numbers::pi * r * r * r) * (3.0 * moment.dot(u) * u - moment);
}

TwoSpinOperator OperatorField::operator()(const Position3& r) const {
  checked_radius(r);
  return rule_(r);
}

TwoSpinOperator interaction_matrix(const Position3& r, double coupling) {
  const double rn = checked_radius(r);
  const auto& g = generators();
  const TwoSpinOperator sp = projected(g.particle, r);
  const TwoSpinOperator sl = projected(g.loop, r);
  const double r2 = rn * rn;
  const double pre = -coupling / (4.0 * std::numbers::pi * r2 * rn);
  return ((sp * sl) * (3.0 / r2) - g.dot) * pre;
}

TwoSpinOperator force_matrix(const Position3& r, double coupling) {
  const double rn = checked_radius(r);
  const auto& g = generators();
  const TwoSpinOperator sp = projected(g.particle, r);
  const TwoSpinOperator sl = projected(g.loop, r);
  const double r2 = rn * rn;
  const double pre = 3.0 * coupling / (4.0 * std::numbers::pi * r2 * r2 * rn);
  const TwoSpinOperator bracket = g.particle[2] * sl + sp * g.loop[2] -
                                  (sp * sl) * (5.0 * r.z / r2) + g.dot * r.z;
  return bracket * pre;
}

OperatorField interaction_hamiltonian(double coupling) {
  return OperatorField([coupling](const Position3& r) { return interaction_matrix(r, coupling); });
}

OperatorField force_operator(double coupling) {
  return OperatorField([coupling](const Position3& r) { return force_matrix(r, coupling); });
}

TwoSpinOperator zeeman_term(const PhysicalParams& params) {
  const auto& g = generators();
  return (g.particle[2] * params.alpha + g.loop[2] * params.beta) * (-params.B0);
}

TwoSpinOperator zeeman_term_natural(const PhysicalParams& params, const NaturalUnits& units) {
  // hbar * omega / (m l^2 / tau^2) = kappa * tau * omega
  return zeeman_term(params) * (kinetic_scale(params, units) * units.time);
}

}  // namespace qsg
