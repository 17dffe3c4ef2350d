#include "qsg/epr.hpp"

#include <cmath>
#include <cstdio>

#include "qsg/error.hpp"
#include "qsg/tolerances.hpp"

namespace qsg {

namespace {

// Bit positions within the 16-dim index, most significant first:
// particle1, particle2, loop1, loop2. Bit value 1 means down.
constexpr int kParticleBit[2] = {3, 2};
constexpr int kLoopBit[2] = {1, 0};

int bit(int index, int position) { return (index >> position) & 1; }

Eigen::Vector4cd bell_vector(BellState b) {
  const double s = 1.0 / std::sqrt(2.0);
  Eigen::Vector4cd v = Eigen::Vector4cd::Zero();  // |p1 p2>, p1 slowest
  switch (b) {
    case BellState::singlet: v << 0, s, -s, 0; break;
    case BellState::triplet_zero: v << 0, s, s, 0; break;
    case BellState::triplet_plus: v << s, 0, 0, s; break;
    case BellState::triplet_minus: v << s, 0, 0, -s; break;
  }
  return v;
}

Eigen::Matrix2cd loop_density(double p, LoopRepresentation rep) {
  Eigen::Matrix2cd rho = Eigen::Matrix2cd::Zero();
  if (rep == LoopRepresentation::mixture) {
    rho(0, 0) = p;
    rho(1, 1) = 1.0 - p;
  } else {
    const Eigen::Vector2cd a(std::sqrt(p), std::sqrt(1.0 - p));
    rho = a * a.adjoint();
  }
  return rho;
}

}  // namespace

void EPRScenario::validate() const {
  if (!(p1_up >= 0.0 && p1_up <= 1.0) || !(p2_up >= 0.0 && p2_up <= 1.0)) {
    throw ValidationError("loop probabilities must lie in [0, 1]");
  }
}

Matrix16cd build_state(const EPRScenario& s) {
  s.validate();
  const Eigen::Vector4cd b = bell_vector(s.bell);
  const Eigen::Matrix4cd pair = b * b.adjoint();
  const Eigen::Matrix2cd l1 = loop_density(s.p1_up, s.loops);
  const Eigen::Matrix2cd l2 = loop_density(s.p2_up, s.loops);
  Eigen::Matrix4cd loops;
  for (int a = 0; a < 2; ++a)
    for (int c = 0; c < 2; ++c) loops.block<2, 2>(2 * a, 2 * c) = l1(a, c) * l2;
  Matrix16cd rho;
  for (int a = 0; a < 4; ++a)
    for (int c = 0; c < 4; ++c) rho.block<4, 4>(4 * a, 4 * c) = pair(a, c) * loops;
  return rho;
}

Matrix16cd wing_projector(Wing wing, Outcome outcome) {
  const int w = static_cast<int>(wing);
  Matrix16cd proj = Matrix16cd::Zero();
  for (int i = 0; i < 16; ++i) {
    const bool parallel = bit(i, kParticleBit[w]) == bit(i, kLoopBit[w]);
    if (parallel == (outcome == Outcome::up)) proj(i, i) = 1.0;
  }
  return proj;
}

double JointDistribution::marginal(Wing wing, Outcome o) const {
  const int k = static_cast<int>(o);
  return wing == Wing::one ? p[k][0] + p[k][1] : p[0][k] + p[1][k];
}

JointDistribution joint_distribution(const EPRScenario& scenario) {
  const Matrix16cd rho = build_state(scenario);
  JointDistribution d;
  for (Outcome o1 : {Outcome::up, Outcome::down}) {
    const Matrix16cd p1 = wing_projector(Wing::one, o1);
    for (Outcome o2 : {Outcome::up, Outcome::down}) {
      const Matrix16cd p2 = wing_projector(Wing::two, o2);
      const cplx v = (rho * p1 * p2).trace();
      if (std::abs(v.imag()) >= tol::expectation_imag) {
        throw NumericalError("joint probability has an imaginary part");
      }
      d.p[static_cast<int>(o1)][static_cast<int>(o2)] = std::max(0.0, v.real());
    }
  }
  return d;
}

Conditional conditional(const JointDistribution& dist, Wing given, Outcome outcome) {
  const double m = dist.marginal(given, outcome);
  if (!(m > 0.0)) throw ValidationError("conditioning event has zero probability");
  const int k = static_cast<int>(outcome);
  if (given == Wing::one) return {dist.p[k][0] / m, dist.p[k][1] / m};
  return {dist.p[0][k] / m, dist.p[1][k] / m};
}

std::vector<SweepRow> correlation_sweep(const std::vector<double>& p_grid, BellState bell,
                                        LoopRepresentation loops) {
  std::vector<SweepRow> rows;
  rows.reserve(p_grid.size());
  for (double p : p_grid) {
    if (!(p > 0.0 && p <= 1.0)) throw ValidationError("sweep probabilities must lie in (0, 1]");
    const JointDistribution d = joint_distribution({bell, p, p, loops});
    rows.push_back({p, conditional(d, Wing::one, Outcome::down).up});
  }
  return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "p,cond_up_given_down\n";
  char line[64];
  for (const auto& r : rows) {
    std::snprintf(line, sizeof line, "%.12g,%.12g\n", r.p, r.cond_up_given_down);
    out << line;
  }
}

BellState parse_bell_state(const std::string& name) {
  if (name == "singlet") return BellState::singlet;
  if (name == "triplet0") return BellState::triplet_zero;
  if (name == "triplet+") return BellState::triplet_plus;
  if (name == "triplet-") return BellState::triplet_minus;
  throw ValidationError("unknown Bell state: " + name);
}

const char* to_string(BellState b) {
  switch (b) {
    case BellState::singlet: return "singlet";
    case BellState::triplet_zero: return "triplet0";
    case BellState::triplet_plus: return "triplet+";
    case BellState::triplet_minus: return "triplet-";
  }
  return "?";
}

}  // namespace qsg
