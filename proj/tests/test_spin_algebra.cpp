#include <doctest.h>

#include <vector>

#include "qsg/error.hpp"
#include "qsg/spin_algebra.hpp"

using namespace qsg;

namespace {

double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

SpinState uu() { return basis_state(Spin::up, Spin::up); }
SpinState ud() { return basis_state(Spin::up, Spin::down); }
SpinState du() { return basis_state(Spin::down, Spin::up); }
SpinState dd() { return basis_state(Spin::down, Spin::down); }

TwoSpinOperator pp(Axis a, Axis b) {
  return embed(spin_generator(a), Slot::particle) * embed(spin_generator(b), Slot::loop);
}

}  // namespace

TEST_SUITE("spin_algebra") {

TEST_CASE("generators") {
  const auto sz = spin_generator(Axis::z).matrix;
  CHECK(max_abs(sz - Eigen::Vector2cd(0.5, -0.5).asDiagonal().toDenseMatrix()) == 0.0);
  const auto sx = spin_generator(Axis::x).matrix;
  CHECK(max_abs(sx * sx - 0.25 * Eigen::Matrix2cd::Identity()) < 1e-15);

  // [S_i, S_j] = i eps_ijk S_k for all ordered pairs
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const auto a = spin_generator(kAxes[i]).matrix, b = spin_generator(kAxes[j]).matrix;
      Eigen::Matrix2cd want = Eigen::Matrix2cd::Zero();
      for (int k = 0; k < 3; ++k) {
        const int eps = (i - j) * (j - k) * (k - i) / 2;
        want += cplx{0.0, double(eps)} * spin_generator(kAxes[k]).matrix;
      }
      CHECK(max_abs(commutator(a, b) - want) < 1e-12);
    }
  }
  for (Axis a : kAxes) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(spin_generator(a).matrix);
    CHECK(es.eigenvalues()[0] == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(es.eigenvalues()[1] == doctest::Approx(0.5).epsilon(1e-14));
  }
}

TEST_CASE("embedding") {
  const auto zp = embed(spin_generator(Axis::z), Slot::particle).matrix;
  const auto zl = embed(spin_generator(Axis::z), Slot::loop).matrix;
  CHECK(max_abs(zp - Eigen::Vector4cd(0.5, 0.5, -0.5, -0.5).asDiagonal().toDenseMatrix()) == 0.0);
  CHECK(max_abs(zl - Eigen::Vector4cd(0.5, -0.5, 0.5, -0.5).asDiagonal().toDenseMatrix()) == 0.0);

  const Eigen::Vector4cd flipped = pp(Axis::x, Axis::x).matrix * uu().amplitudes();
  CHECK(max_abs(flipped - 0.25 * dd().amplitudes()) < 1e-15);

  for (Axis a : kAxes) {
    for (Axis b : kAxes) {
      const auto p = embed(spin_generator(a), Slot::particle).matrix;
      const auto l = embed(spin_generator(b), Slot::loop).matrix;
      CHECK(max_abs(commutator(p, l)) < 1e-15);
    }
  }
}

TEST_CASE("spin_dot") {
  CHECK(expectation(spin_dot(), uu()) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(expectation(spin_dot(), singlet()) == doctest::Approx(-0.75).epsilon(1e-14));
  CHECK(expectation(spin_dot(), ud()) == doctest::Approx(-0.25).epsilon(1e-14));

  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(spin_dot().matrix);
  const Eigen::Vector4d want(-0.75, 0.25, 0.25, 0.25);
  CHECK((es.eigenvalues() - want).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("basis states") {
  CHECK(uu().amplitudes() == Eigen::Vector4cd(1, 0, 0, 0));
  CHECK(du().amplitudes() == Eigen::Vector4cd(0, 0, 1, 0));
  CHECK(dd().amplitudes() == Eigen::Vector4cd(0, 0, 0, 1));
}

TEST_CASE("superpose") {
  const double s = 1.0 / std::sqrt(2.0);
  {
    const SpinState st[] = {uu(), dd()};
    const cplx amp[] = {1.0, 1.0};
    CHECK(max_abs(superpose(st, amp).amplitudes() - Eigen::Vector4cd(s, 0, 0, s)) < 1e-15);
  }
  {
    const SpinState st[] = {ud(), du()};
    const cplx amp[] = {1.0, -1.0};
    CHECK(max_abs(superpose(st, amp).amplitudes() - singlet().amplitudes()) < 1e-15);
  }
  {
    const SpinState st[] = {uu()};
    const cplx amp[] = {3.0};
    CHECK(max_abs(superpose(st, amp).amplitudes() - uu().amplitudes()) < 1e-15);
  }
  {
    const SpinState st[] = {uu(), uu()};
    const cplx amp[] = {1.0, -1.0};
    CHECK_THROWS_WITH_AS(superpose(st, amp), "degenerate superposition", ValidationError);
  }
  const SpinState st[] = {uu()};
  const cplx amp[] = {1.0, 1.0};
  CHECK_THROWS_AS(superpose(st, amp), ValidationError);
}

TEST_CASE("mixture") {
  const SpinState st[] = {uu(), dd()};
  const double w[] = {0.5, 0.5};
  const auto rho = mixture(st, w).matrix();
  CHECK(max_abs(rho - Eigen::Vector4cd(0.5, 0, 0, 0.5).asDiagonal().toDenseMatrix()) < 1e-15);

  const SpinState one[] = {uu()};
  const double w1[] = {1.0};
  CHECK(mixture(one, w1).purity() == doctest::Approx(1.0));
  CHECK(density_of(singlet()).purity() == doctest::Approx(1.0).epsilon(1e-14));

  const SpinState all[] = {uu(), ud(), du(), dd()};
  const double quarter[] = {0.25, 0.25, 0.25, 0.25};
  CHECK(max_abs(mixture(all, quarter).matrix() - 0.25 * Eigen::Matrix4cd::Identity()) < 1e-15);

  const double bad_sum[] = {0.5, 0.6};
  const double negative[] = {1.5, -0.5};
  CHECK_THROWS_AS(mixture(st, bad_sum), ValidationError);
  CHECK_THROWS_AS(mixture(st, negative), ValidationError);
}

TEST_CASE("state validation") {
  CHECK_THROWS_AS(SpinState(Eigen::Vector4cd(1, 1, 0, 0)), ValidationError);
  CHECK_THROWS_AS(SpinState(Eigen::Vector4cd(NAN, 0, 0, 0)), ValidationError);
  CHECK_THROWS_AS(SpinDensity(Eigen::Matrix4cd::Identity()), ValidationError);
  Eigen::Matrix4cd not_psd = Eigen::Matrix4cd::Zero();
  not_psd(0, 0) = 1.5;
  not_psd(1, 1) = -0.5;
  CHECK_THROWS_AS(SpinDensity{not_psd}, ValidationError);
}

TEST_CASE("expectation") {
  CHECK(expectation(pp(Axis::z, Axis::z), uu()) == doctest::Approx(0.25));
  CHECK(expectation(pp(Axis::x, Axis::x), parallel_coherent()) == doctest::Approx(0.25));
  CHECK(expectation(pp(Axis::y, Axis::y), parallel_coherent()) == doctest::Approx(-0.25));

  TwoSpinOperator skew{Eigen::Matrix4cd::Zero()};
  skew.matrix(0, 0) = cplx{0.0, 1.0};
  CHECK_THROWS_AS(expectation(skew, uu()), ValidationError);

  // Reality for a batch of states and Hermitian operators.
  const SpinState states[] = {uu(), singlet(), parallel_coherent(), antiparallel_coherent(),
                              triplet_zero()};
  for (const auto& s : states) {
    for (Axis a : kAxes) {
      for (Axis b : kAxes) {
        const TwoSpinOperator op = pp(a, b);
        const TwoSpinOperator herm{0.5 * (op.matrix + op.matrix.adjoint())};
        CHECK_NOTHROW(expectation(herm, s));
      }
    }
  }
}

TEST_CASE("correlators") {
  const Eigen::Matrix3d k_singlet = spin_correlators(singlet());
  CHECK((k_singlet + 0.25 * Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() < 1e-15);
  const Eigen::Matrix3d k_coh = spin_correlators(parallel_coherent());
  CHECK((k_coh - Eigen::Vector3d(0.25, -0.25, 0.25).asDiagonal().toDenseMatrix())
            .cwiseAbs()
            .maxCoeff() < 1e-15);
  const Eigen::Matrix3d k_mix = spin_correlators(parallel_mixture());
  CHECK((k_mix - spin_correlators(uu())).cwiseAbs().maxCoeff() < 1e-15);
}

}  // TEST_SUITE
