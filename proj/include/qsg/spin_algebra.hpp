#pragma once

// Algebra of one and two spin-1/2 systems: the incident particle and the
// two-state loop dipole.
//
// Conventions used throughout the library:
//   * hbar = 1, so spin generators are sigma/2 and the two-spin dot product
//     has eigenvalues 1/4 (triplet) and -3/4 (singlet).
//   * Product basis ordering is {up-up, up-down, down-up, down-down} with the
//     particle index varying slowest: |particle, loop>.

#include <complex>
#include <span>
#include <variant>

#include <Eigen/Dense>

namespace qsg {

using cplx = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

enum class Axis { x, y, z };
enum class Slot { particle, loop };
enum class Spin { up, down };

inline constexpr Axis kAxes[3] = {Axis::x, Axis::y, Axis::z};

/// Single spin-1/2 operator (2x2), in units of hbar.
struct SpinOperator {
  Eigen::Matrix2cd matrix;
};

/// Operator on the particle (x) loop space (4x4).
struct TwoSpinOperator {
  Eigen::Matrix4cd matrix;

  TwoSpinOperator operator+(const TwoSpinOperator& o) const { return {matrix + o.matrix}; }
  TwoSpinOperator operator-(const TwoSpinOperator& o) const { return {matrix - o.matrix}; }
  TwoSpinOperator operator*(const TwoSpinOperator& o) const { return {matrix * o.matrix}; }
  TwoSpinOperator operator*(cplx s) const { return {matrix * s}; }
  TwoSpinOperator operator*(double s) const { return {matrix * s}; }
};

/// Normalized pure state of the particle-loop spin system.
class SpinState {
 public:
  /// Throws ValidationError unless the vector is finite with unit norm.
  explicit SpinState(const Eigen::Vector4cd& amplitudes);

  const Eigen::Vector4cd& amplitudes() const { return amplitudes_; }
  cplx operator[](int i) const { return amplitudes_[i]; }

 private:
  Eigen::Vector4cd amplitudes_;
};

/// Density matrix on the particle-loop spin space: Hermitian, unit trace,
/// positive semidefinite.
class SpinDensity {
 public:
  explicit SpinDensity(const Eigen::Matrix4cd& matrix);

  const Eigen::Matrix4cd& matrix() const { return matrix_; }
  double purity() const;

 private:
  Eigen::Matrix4cd matrix_;
};

/// Anything the force contraction accepts: a coherent state or a mixture.
using SpinInput = std::variant<SpinState, SpinDensity>;

SpinOperator spin_generator(Axis axis);
TwoSpinOperator embed(const SpinOperator& op, Slot slot);
/// Sum over axes of S_i(particle) S_i(loop).
TwoSpinOperator spin_dot();
TwoSpinOperator identity4();

SpinState basis_state(Spin particle, Spin loop);

/// Normalized linear combination. Throws ValidationError on mismatched
/// lengths or a vanishing result ("degenerate superposition").
SpinState superpose(std::span<const SpinState> states, std::span<const cplx> amplitudes);

/// Statistical mixture sum_i w_i |psi_i><psi_i|. Weights must be
/// non-negative and sum to one within tol::probability_sum.
SpinDensity mixture(std::span<const SpinState> states, std::span<const double> weights);

SpinDensity density_of(const SpinState& state);

double expectation(const TwoSpinOperator& op, const SpinState& state);
double expectation(const TwoSpinOperator& op, const SpinDensity& rho);
double expectation(const TwoSpinOperator& op, const SpinInput& input);

/// Correlation matrix K(i, j) = <S_i(particle) S_j(loop)>.
Eigen::Matrix3d spin_correlators(const SpinInput& input);

bool is_hermitian(const ComplexMatrix& m, double tolerance);

template <class M>
M commutator(const M& a, const M& b) {
  return a * b - b * a;
}

// Named states.
SpinState singlet();
SpinState triplet_zero();
/// (|up,up> + |down,down>)/sqrt(2): the parallel subspace as one coherent state.
SpinState parallel_coherent();
/// (|up,down> + |down,up>)/sqrt(2).
SpinState antiparallel_coherent();
/// Equal-weight mixture of |up,up> and |down,down>.
SpinDensity parallel_mixture();
/// Equal-weight mixture of |up,down> and |down,up>.
SpinDensity antiparallel_mixture();

}  // namespace qsg
