#pragma once

// Two-wing EPR scenario: a Bell pair whose members each pass a two-state loop
// detector. Each wing only resolves whether (particle, loop) is parallel
// ("up") or antiparallel ("down").
//
// Composite ordering is (particle1, particle2, loop1, loop2), first factor
// slowest, each factor with |up> = index 0.

#include <ostream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qsg/spin_algebra.hpp"

namespace qsg {

/// singlet = (|ud> - |du>)/sqrt2, triplet_zero = (|ud> + |du>)/sqrt2,
/// triplet_plus = (|uu> + |dd>)/sqrt2, triplet_minus = (|uu> - |dd>)/sqrt2.
enum class BellState { singlet, triplet_zero, triplet_plus, triplet_minus };
enum class LoopRepresentation { coherent, mixture };
enum class Outcome { up = 0, down = 1 };  // up = parallel, down = antiparallel
enum class Wing { one = 0, two = 1 };

struct EPRScenario {
  BellState bell = BellState::singlet;
  double p1_up = 0.1;
  double p2_up = 0.1;
  LoopRepresentation loops = LoopRepresentation::coherent;

  void validate() const;
};

using Matrix16cd = Eigen::Matrix<cplx, 16, 16>;

/// Density matrix of bell (x) loop1 (x) loop2. Coherent loops are
/// sqrt(p)|up> + sqrt(1-p)|down>; mixed loops are diag(p, 1-p).
Matrix16cd build_state(const EPRScenario& scenario);

/// Projector of one wing onto the parallel or antiparallel subspace of its
/// (particle, loop) pair.
Matrix16cd wing_projector(Wing wing, Outcome outcome);

struct JointDistribution {
  /// p[o1][o2] with o = 0 for up, 1 for down.
  double p[2][2] = {{0, 0}, {0, 0}};

  double operator()(Outcome o1, Outcome o2) const {
    return p[static_cast<int>(o1)][static_cast<int>(o2)];
  }
  double marginal(Wing wing, Outcome o) const;
};

JointDistribution joint_distribution(const EPRScenario& scenario);

struct Conditional {
  double up = 0.0;
  double down = 0.0;
};

/// Distribution of the other wing given `outcome` at `given`. Throws
/// ValidationError if the conditioning event has zero probability.
Conditional conditional(const JointDistribution& dist, Wing given, Outcome outcome);

struct SweepRow {
  double p = 0.0;
  double cond_up_given_down = 0.0;
};

/// P(up at wing 2 | down at wing 1) with both loops at the same p.
std::vector<SweepRow> correlation_sweep(const std::vector<double>& p_grid, BellState bell,
                                        LoopRepresentation loops = LoopRepresentation::coherent);

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

BellState parse_bell_state(const std::string& name);
const char* to_string(BellState b);

}  // namespace qsg
