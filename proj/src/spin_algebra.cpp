#include "qsg/spin_algebra.hpp"

#include <cmath>
#include <string>

#include "qsg/error.hpp"
#include "qsg/tolerances.hpp"

namespace qsg {

namespace {

bool all_finite(const ComplexMatrix& m) {
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    const cplx v = m.data()[i];
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  }
  return true;
}

double checked_real(cplx value) {
  if (std::abs(value.imag()) >= tol::expectation_imag) {
    throw ValidationError("non-Hermitian expectation: imaginary part " +
                          std::to_string(value.imag()));
  }
  return value.real();
}

}  // namespace

SpinState::SpinState(const Eigen::Vector4cd& amplitudes) : amplitudes_(amplitudes) {
  if (!all_finite(amplitudes_)) throw ValidationError("spin state has non-finite amplitudes");
  if (std::abs(amplitudes_.norm() - 1.0) > tol::normalization) {
    throw ValidationError("spin state is not normalized");
  }
}

SpinDensity::SpinDensity(const Eigen::Matrix4cd& matrix) : matrix_(matrix) {
  if (!all_finite(matrix_)) throw ValidationError("density matrix has non-finite entries");
  if (!is_hermitian(matrix_, tol::hermitian)) {
    throw ValidationError("density matrix is not Hermitian");
  }
  if (std::abs(matrix_.trace() - cplx{1.0}) > tol::normalization) {
    throw ValidationError("density matrix trace differs from one");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(matrix_, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -tol::positivity) {
    throw ValidationError("density matrix has a negative eigenvalue");
  }
}

double SpinDensity::purity() const { return (matrix_ * matrix_).trace().real(); }

SpinOperator spin_generator(Axis axis) {
  const cplx i{0.0, 1.0};
  Eigen::Matrix2cd m;
  switch (axis) {
    case Axis::x:
      m << 0.0, 1.0, 1.0, 0.0;
      break;
    case Axis::y:
      m << 0.0, -i, i, 0.0;
      break;
    case Axis::z:
      m << 1.0, 0.0, 0.0, -1.0;
      break;
  }
  return {0.5 * m};
}

TwoSpinOperator embed(const SpinOperator& op, Slot slot) {
  const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  const Eigen::Matrix2cd& left = slot == Slot::particle ? op.matrix : id;
  const Eigen::Matrix2cd& right = slot == Slot::particle ? id : op.matrix;
  Eigen::Matrix4cd out;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) out.block<2, 2>(2 * a, 2 * b) = left(a, b) * right;
  return {out};
}

TwoSpinOperator spin_dot() {
  TwoSpinOperator sum{Eigen::Matrix4cd::Zero()};
  for (Axis a : kAxes) {
    const SpinOperator s = spin_generator(a);
    sum = sum + embed(s, Slot::particle) * embed(s, Slot::loop);
  }
  return sum;
}

TwoSpinOperator identity4() { return {Eigen::Matrix4cd::Identity()}; }

SpinState basis_state(Spin particle, Spin loop) {
  const int index = (particle == Spin::up ? 0 : 2) + (loop == Spin::up ? 0 : 1);
  Eigen::Vector4cd v = Eigen::Vector4cd::Zero();
  v[index] = 1.0;
  return SpinState(v);
}

SpinState superpose(std::span<const SpinState> states, std::span<const cplx> amplitudes) {
  if (states.size() != amplitudes.size() || states.empty()) {
    throw ValidationError("superpose: states and amplitudes must be non-empty and equal in length");
  }
  Eigen::Vector4cd v = Eigen::Vector4cd::Zero();
  for (std::size_t k = 0; k < states.size(); ++k) v += amplitudes[k] * states[k].amplitudes();
  const double n = v.norm();
  if (!(n > 1e-14)) throw ValidationError("degenerate superposition");
  return SpinState(v / n);
}

SpinDensity mixture(std::span<const SpinState> states, std::span<const double> weights) {
  if (states.size() != weights.size() || states.empty()) {
    throw ValidationError("mixture: states and weights must be non-empty and equal in length");
  }
  double total = 0.0;
  Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
  for (std::size_t k = 0; k < states.size(); ++k) {
    if (!(weights[k] >= 0.0)) throw ValidationError("mixture: negative weight");
    total += weights[k];
    const Eigen::Vector4cd& a = states[k].amplitudes();
    rho += weights[k] * a * a.adjoint();
  }
  if (std::abs(total - 1.0) > tol::probability_sum) {
    throw ValidationError("mixture: weights do not sum to one");
  }
  return SpinDensity(rho);
}

SpinDensity density_of(const SpinState& state) {
  const Eigen::Vector4cd& a = state.amplitudes();
  return SpinDensity(a * a.adjoint());
}

double expectation(const TwoSpinOperator& op, const SpinState& state) {
  const Eigen::Vector4cd& a = state.amplitudes();
  return checked_real(a.dot(op.matrix * a));
}

double expectation(const TwoSpinOperator& op, const SpinDensity& rho) {
  return checked_real((rho.matrix() * op.matrix).trace());
}

double expectation(const TwoSpinOperator& op, const SpinInput& input) {
  return std::visit([&](const auto& s) { return expectation(op, s); }, input);
}

Eigen::Matrix3d spin_correlators(const SpinInput& input) {
  Eigen::Matrix3d k;
  for (int i = 0; i < 3; ++i) {
    const TwoSpinOperator p = embed(spin_generator(kAxes[i]), Slot::particle);
    for (int j = 0; j < 3; ++j) {
      const TwoSpinOperator l = embed(spin_generator(kAxes[j]), Slot::loop);
      k(i, j) = expectation(p * l, input);
    }
  }
  return k;
}

bool is_hermitian(const ComplexMatrix& m, double tolerance) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tolerance;
}

SpinState singlet() {
  const SpinState s[] = {basis_state(Spin::up, Spin::down), basis_state(Spin::down, Spin::up)};
  const cplx a[] = {1.0, -1.0};
  return superpose(s, a);
}

SpinState triplet_zero() { return antiparallel_coherent(); }

SpinState parallel_coherent() {
  const SpinState s[] = {basis_state(Spin::up, Spin::up), basis_state(Spin::down, Spin::down)};
  const cplx a[] = {1.0, 1.0};
  return superpose(s, a);
}

SpinState antiparallel_coherent() {
  const SpinState s[] = {basis_state(Spin::up, Spin::down), basis_state(Spin::down, Spin::up)};
  const cplx a[] = {1.0, 1.0};
  return superpose(s, a);
}

SpinDensity parallel_mixture() {
  const SpinState s[] = {basis_state(Spin::up, Spin::up), basis_state(Spin::down, Spin::down)};
  const double w[] = {0.5, 0.5};
  return mixture(s, w);
}

SpinDensity antiparallel_mixture() {
  const SpinState s[] = {basis_state(Spin::up, Spin::down), basis_state(Spin::down, Spin::up)};
  const double w[] = {0.5, 0.5};
  return mixture(s, w);
}

}  // namespace qsg
