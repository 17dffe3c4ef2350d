#pragma once

// Position-dependent spin operators of the particle-loop dipole coupling.
//
// Operator fields are expressed in natural units: positions in l, energies in
// m l^2/tau^2, spin in hbar. The `coupling` argument is the prefactor
// mu0 alpha beta hbar^2 / m in those units, i.e. PhysicalParams::coupling_sign()
// for physical parameters. Dirac-delta contact terms are never evaluated; each
// field carries a flag saying so.

#include <functional>

#include <Eigen/Dense>

#include "qsg/spin_algebra.hpp"
#include "qsg/units.hpp"

namespace qsg {

struct Position3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm() const;
  Eigen::Vector3d vec() const { return {x, y, z}; }
};

/// Point-dipole field (SI) of `moment` at displacement `at`, contact term
/// excluded. Throws NumericalError("dipole singularity") at the origin.
Eigen::Vector3d dipole_field(const Eigen::Vector3d& moment, const Eigen::Vector3d& at,
                             double mu0 = codata::vacuum_permeability);

class OperatorField {
 public:
  using Rule = std::function<TwoSpinOperator(const Position3&)>;

  explicit OperatorField(Rule rule) : rule_(std::move(rule)) {}

  /// Throws NumericalError at r = 0.
  TwoSpinOperator operator()(const Position3& r) const;

  /// Always false: contact terms exist only symbolically.
  bool includes_delta_term() const { return false; }

 private:
  Rule rule_;
};

/// -(coupling / 4 pi r^3) [ (3/r^2)(S_p . r)(S_l . r) - S_p . S_l ].
OperatorField interaction_hamiltonian(double coupling = 1.0);

/// (3 coupling / 4 pi r^5) [ Sz_p (S_l . r) + (S_p . r) Sz_l
///   - (5/r^2)(S_p . r)(S_l . r) z + (S_p . S_l) z ],
/// which equals -d/dz of interaction_hamiltonian. Its expectation is the
/// acceleration <a_z> in natural units.
OperatorField force_operator(double coupling = 1.0);

/// -(alpha Sz_p + beta Sz_l) B0 with S in units of hbar; the result is an
/// angular frequency (energy / hbar, rad/s).
TwoSpinOperator zeeman_term(const PhysicalParams& params);

/// zeeman_term in natural energy units m l^2 / tau^2.
TwoSpinOperator zeeman_term_natural(const PhysicalParams& params, const NaturalUnits& units);

/// Fast path used by the grid propagator: interaction_hamiltonian without
/// the std::function indirection.
TwoSpinOperator interaction_matrix(const Position3& r, double coupling);
TwoSpinOperator force_matrix(const Position3& r, double coupling);

}  // namespace qsg
