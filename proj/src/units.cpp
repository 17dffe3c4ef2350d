#include "qsg/units.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qsg/error.hpp"

namespace qsg {

void PhysicalParams::validate() const {
  if (!(mass > 0.0)) throw ValidationError("mass must be positive");
  if (!(mu0 > 0.0)) throw ValidationError("mu0 must be positive");
  if (!(hbar > 0.0)) throw ValidationError("hbar must be positive");
  if (!std::isfinite(alpha) || !std::isfinite(beta) || alpha * beta == 0.0) {
    throw ValidationError("alpha*beta must be finite and nonzero");
  }
  if (!std::isfinite(B0)) throw ValidationError("B0 must be finite");
}

NaturalUnits derive_length_unit(const PhysicalParams& params, double tau) {
  params.validate();
  if (!(tau > 0.0)) throw ValidationError("tau must be positive");
  const double l5 = params.mu0 * std::abs(params.alpha * params.beta) * params.hbar *
                    params.hbar * tau * tau / params.mass;
  return {std::pow(l5, 0.2), tau, params.mass};
}

double kinetic_scale(const PhysicalParams& params, const NaturalUnits& units) {
  return params.hbar * units.time / (units.mass * units.length * units.length);
}

double beta_from_loop(double current, double radius, double hbar) {
  if (!(current > 0.0) || !(radius > 0.0)) {
    throw ValidationError("loop current and radius must be positive");
  }
  const double moment = current * std::numbers::pi * radius * radius;
  return moment / (0.5 * hbar);
}

double thermal_speed(double temperature, double mass) {
  if (!(temperature > 0.0) || !(mass > 0.0)) {
    throw ValidationError("temperature and mass must be positive");
  }
  return std::sqrt(3.0 * codata::boltzmann * temperature / mass);
}

double electron_gyromagnetic_ratio() {
  return -codata::elementary_charge / (2.0 * codata::electron_mass);
}

Dimension parse_dimension(std::string_view tag) {
  if (tag == "length") return Dimension::length;
  if (tag == "time") return Dimension::time;
  if (tag == "velocity") return Dimension::velocity;
  if (tag == "acceleration") return Dimension::acceleration;
  if (tag == "energy") return Dimension::energy;
  if (tag == "force") return Dimension::force;
  throw ValidationError("unknown dimension tag: " + std::string(tag));
}

namespace {

double unit_of(Dimension dim, const NaturalUnits& u) {
  switch (dim) {
    case Dimension::length: return u.length;
    case Dimension::time: return u.time;
    case Dimension::velocity: return u.velocity();
    case Dimension::acceleration: return u.acceleration();
    case Dimension::energy: return u.energy();
    case Dimension::force: return u.force();
  }
  throw ValidationError("unknown dimension");
}

}  // namespace

double to_natural(double value_si, Dimension dim, const NaturalUnits& units) {
  return value_si / unit_of(dim, units);
}

double from_natural(double natural_value, Dimension dim, const NaturalUnits& units) {
  return natural_value * unit_of(dim, units);
}

PhysicalParams preset_params() {
  PhysicalParams p;
  p.alpha = electron_gyromagnetic_ratio();
  p.beta = std::copysign(beta_from_loop(kPresetLoopCurrent, kPresetLoopRadius), p.alpha);
  p.mass = codata::proton_mass;
  p.B0 = 0.5 * codata::flux_quantum / (std::numbers::pi * kPresetLoopRadius * kPresetLoopRadius);
  return p;
}

}  // namespace qsg
