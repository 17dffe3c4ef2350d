#pragma once

// Second-order (force) term of the commutator expansion of <z(t)>, evaluated
// as spin correlators contracted against spatial moments.
//
// With K(i,j) = <S_i(particle) S_j(loop)> and natural units, the acceleration
// is
//   <a_z> = (3 g / 4 pi) sum_ij K(i,j) < T_ij / r^5 >,
//   T_ij  = delta_iz r_j + r_i delta_jz - 5 r_i r_j z / r^2 + delta_ij z,
// where g = mu0 alpha beta hbar^2 / m in natural units. Contact terms are
// omitted.

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "qsg/spin_algebra.hpp"
#include "qsg/wavepacket.hpp"

namespace qsg {

struct ForceExpectation {
  /// Acceleration in natural units l / tau^2.
  double a_z = 0.0;
  /// The four bracket terms [Sz(S.r), (S.r)Sz, -5(S.r)(S.r)z/r^2, (S.S)z]
  /// evaluated with the K(z,z) correlator only: the part the parallel-spin
  /// closed form accounts for.
  std::array<double, 4> decomposition{};
  /// Contributions of every other nonzero correlator, labelled "K_ij".
  std::vector<std::pair<std::string, double>> extra_terms;

  double extra_total() const;
};

ForceExpectation contract_force(const SpinInput& spin, const SpatialMoments& moments,
                                double coupling = 1.0);

/// (3 g / 16 pi) (-5 <z^3/r^7> + 3 <z/r^5>).
double parallel_closed_form(const SpatialMoments& moments, double coupling = 1.0);

/// Exactly -parallel_closed_form.
double antiparallel_closed_form(const SpatialMoments& moments, double coupling = 1.0);

/// On-axis force between coaxial point dipoles m1 (at the origin) and m2 (at
/// height z), SI: F_z = -3 mu0 m1 m2 / (2 pi z^4) * sign(z).
double classical_dipole_force(double m1, double m2, double z,
                              double mu0 = codata::vacuum_permeability);

}  // namespace qsg
