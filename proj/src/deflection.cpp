#include "qsg/deflection.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "qsg/error.hpp"

namespace qsg {

namespace {

constexpr double kNegligibleCorrelator = 1e-14;
constexpr char kAxisName[3] = {'x', 'y', 'z'};

MomentKey with_powers(std::array<int, 3> e, int n) { return {e[0], e[1], e[2], n}; }

std::array<int, 3> unit(int axis) {
  std::array<int, 3> e{0, 0, 0};
  e[axis] = 1;
  return e;
}

// <T_ij / r^5> for one correlator component.
double tensor_moment(int i, int j, const SpatialMoments& m) {
  double sum = 0.0;
  if (i == 2) sum += m.at(with_powers(unit(j), 5));
  if (j == 2) sum += m.at(with_powers(unit(i), 5));
  std::array<int, 3> e{0, 0, 1};
  e[i] += 1;
  e[j] += 1;
  sum -= 5.0 * m.at(with_powers(e, 7));
  if (i == j) sum += m.at({0, 0, 1, 5});
  return sum;
}

}  // namespace

double ForceExpectation::extra_total() const {
  double s = 0.0;
  for (const auto& [name, value] : extra_terms) s += value;
  return s;
}

ForceExpectation contract_force(const SpinInput& spin, const SpatialMoments& moments,
                                double coupling) {
  const Eigen::Matrix3d k = spin_correlators(spin);
  const double pre = 3.0 * coupling / (4.0 * std::numbers::pi);

  ForceExpectation out;
  const double kzz = k(2, 2);
  if (std::abs(kzz) > kNegligibleCorrelator) {
    const double z5 = moments.at({0, 0, 1, 5});
    const double z7 = moments.at({0, 0, 3, 7});
    out.decomposition = {pre * kzz * z5, pre * kzz * z5, -5.0 * pre * kzz * z7, pre * kzz * z5};
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i == 2 && j == 2) continue;
      if (std::abs(k(i, j)) <= kNegligibleCorrelator) continue;
      const std::string label = std::string("K_") + kAxisName[i] + kAxisName[j];
      out.extra_terms.emplace_back(label, pre * k(i, j) * tensor_moment(i, j, moments));
    }
  }
  out.a_z = std::accumulate(out.decomposition.begin(), out.decomposition.end(), 0.0) +
            out.extra_total();
  return out;
}

double parallel_closed_form(const SpatialMoments& moments, double coupling) {
  const double pre = 3.0 * coupling / (16.0 * std::numbers::pi);
  return pre * (-5.0 * moments.at({0, 0, 3, 7}) + 3.0 * moments.at({0, 0, 1, 5}));
}

double antiparallel_closed_form(const SpatialMoments& moments, double coupling) {
  return -parallel_closed_form(moments, coupling);
}

double classical_dipole_force(double m1, double m2, double z, double mu0) {
  if (z == 0.0 || !std::isfinite(z)) throw ValidationError("classical dipole force needs z != 0");
  const double az = std::abs(z);
  return -3.0 * mu0 * m1 * m2 * z / (2.0 * std::numbers::pi * az * az * az * az * az);
}

}  // namespace qsg
