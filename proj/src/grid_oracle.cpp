#include "qsg/grid_oracle.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "qsg/dipole.hpp"
#include "qsg/error.hpp"
#include "qsg/tolerances.hpp"

namespace qsg {

namespace {

constexpr double kStepNormDrift = 1e-6;

double slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double den = n * sxx - sx * sx;
  if (!(std::abs(den) > 0.0)) throw NumericalError("degenerate log-log fit");
  return (n * sxy - sx * sy) / den;
}

Eigen::Matrix4cd hermitian_exponential(const Eigen::Matrix4cd& h, double scale) {
  // exp(-i * scale * h) for Hermitian h
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(h);
  Eigen::Vector4cd phases;
  for (int k = 0; k < 4; ++k) phases[k] = std::polar(1.0, -scale * solver.eigenvalues()[k]);
  return solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
}

double kinetic_spectral_radius(const GridSpec& g) {
  const double h = g.spacing();
  return 0.5 * g.kinetic_scale * 3.0 * 4.0 / (h * h);
}

template <class F>
void for_each_point(const GridSpec& g, F&& f) {
  const int n = g.points_per_axis;
  std::size_t index = 0;
  for (int ix = 0; ix < n; ++ix) {
    const double x = g.coordinate(0, ix);
    for (int iy = 0; iy < n; ++iy) {
      const double y = g.coordinate(1, iy);
      for (int iz = 0; iz < n; ++iz, ++index) f(index, Position3{x, y, g.coordinate(2, iz)});
    }
  }
}

double max_dipole_radius(const GridSpec& g, double coupling) {
  if (coupling == 0.0) return 0.0;
  // |V| ~ |g| / (4 pi r^3) * max eigenvalue of the bracket (1/2); bound it at the
  // box point nearest the origin.
  const double c = g.box_center.norm();
  const double nearest = c - std::sqrt(3.0) * g.box_half_width;
  return std::abs(coupling) / (4.0 * std::numbers::pi * nearest * nearest * nearest);
}

}  // namespace

// ---------------------------------------------------------------------------

double GridSpec::coordinate(int axis, int i) const {
  const double c = axis == 0 ? box_center.x : axis == 1 ? box_center.y : box_center.z;
  return c - box_half_width + (i + 1) * spacing();
}

std::size_t GridSpec::point_count() const {
  const auto n = static_cast<std::size_t>(points_per_axis);
  return n * n * n;
}

void GridSpec::validate() const {
  if (points_per_axis < 4) throw ValidationError("grid needs at least 4 points per axis");
  if (!(box_half_width > 0.0)) throw ValidationError("box half-width must be positive");
  if (!(kinetic_scale > 0.0)) throw ValidationError("kinetic scale must be positive");
  if (!(dt > 0.0)) throw ValidationError("time step must be positive");
  if (!(box_center.norm() - std::sqrt(3.0) * box_half_width > 0.0)) {
    throw ValidationError("grid box must exclude the origin");
  }
}

GridHamiltonian GridHamiltonian::full(double coupling, const TwoSpinOperator& zeeman) {
  return {true, coupling, zeeman};
}
GridHamiltonian GridHamiltonian::free_particle() {
  return {true, 0.0, {Eigen::Matrix4cd::Zero()}};
}
GridHamiltonian GridHamiltonian::zeeman_only(const TwoSpinOperator& zeeman) {
  return {true, 0.0, zeeman};
}
GridHamiltonian GridHamiltonian::zero() { return {false, 0.0, {Eigen::Matrix4cd::Zero()}}; }

double max_stable_dt(const GridSpec& grid, const GridHamiltonian& h) {
  const double rho = (h.kinetic ? kinetic_spectral_radius(grid) : 0.0) +
                     max_dipole_radius(grid, h.coupling) / grid.kinetic_scale;
  return rho > 0.0 ? kMaxPhasePerStep / rho : INFINITY;
}

// ---------------------------------------------------------------------------

GridState::GridState(const GridSpec& grid, std::vector<cplx> amplitudes)
    : grid_(grid), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != 4 * grid_.point_count()) {
    throw ValidationError("grid state size does not match the grid");
  }
}

double GridState::norm() const {
  // Extended accumulator: the norm is the drift monitor, so its own rounding
  // must stay well below the effect it watches for.
  long double s = 0.0L;
  for (const cplx& a : amplitudes_) s += std::norm(a);
  return static_cast<double>(s);
}

Eigen::Matrix4cd GridState::spin_density() const {
  Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
  for (std::size_t p = 0; p < grid_.point_count(); ++p) {
    const Eigen::Map<const Eigen::Vector4cd> v(amplitudes_.data() + 4 * p);
    rho += v * v.adjoint();
  }
  return rho;
}

GridState initialize(const WavePacket& packet, const SpinState& spin, const GridSpec& grid,
                     double velocity_z) {
  grid.validate();
  packet.validate();
  const double margin = grid.box_half_width - 2.0 * grid.spacing();
  const double offsets[3] = {packet.center.x - grid.box_center.x,
                             packet.center.y - grid.box_center.y,
                             packet.center.z - grid.box_center.z};
  for (double o : offsets) {
    if (std::abs(o) + packet.support_half_width() > margin) {
      throw ValidationError("wavepacket does not fit inside the grid box");
    }
  }
  const double k = velocity_z / grid.kinetic_scale;
  std::vector<cplx> amp(4 * grid.point_count());
  double total = 0.0;
  for_each_point(grid, [&](std::size_t i, const Position3& r) {
    const double a = std::sqrt(packet.density(r.x, r.y, r.z));
    const cplx phase = std::polar(a, k * (r.z - packet.center.z));
    for (int s = 0; s < 4; ++s) amp[4 * i + s] = phase * spin[s];
    total += a * a;
  });
  if (!(total > 0.0)) throw ValidationError("wavepacket misses every grid point");
  GridState state(grid, std::move(amp));
  const double scale = 1.0 / std::sqrt(state.norm());
  for (cplx& a : state.amplitudes()) a *= scale;
  return state;
}

// ---------------------------------------------------------------------------

struct Propagator::Impl {
  GridSpec grid;
  bool kinetic = true;
  // Potential half steps: before and after the kinetic factor.
  std::vector<Eigen::Matrix4cd> pre;
  std::vector<Eigen::Matrix4cd> post;
  std::vector<double> kinetic_phase_cos;
  std::vector<double> kinetic_phase_sin;
  fftw_plan plan = nullptr;
  std::vector<double> buffer;

  ~Impl() {
    if (plan) fftw_destroy_plan(plan);
  }
};

Propagator::Propagator(const GridSpec& grid, const GridHamiltonian& h)
    : impl_(std::make_unique<Impl>()) {
  grid.validate();
  const double bound = max_stable_dt(grid, h);
  if (grid.dt > bound * (1.0 + 1e-12)) {
    char msg[96];
    std::snprintf(msg, sizeof msg, "time step %.3g exceeds the accuracy bound %.3g", grid.dt, bound);
    throw NumericalError(msg);
  }
  if (!is_hermitian(h.zeeman.matrix, tol::hermitian)) {
    throw ValidationError("constant spin term must be Hermitian");
  }
  Impl& m = *impl_;
  m.grid = grid;
  m.kinetic = h.kinetic;
  const double half = 0.5 * grid.dt / grid.kinetic_scale;

  const Eigen::Matrix4cd zeeman_half = hermitian_exponential(h.zeeman.matrix, half);
  m.pre.resize(grid.point_count());
  m.post.resize(grid.point_count());
  for_each_point(grid, [&](std::size_t i, const Position3& r) {
    const Eigen::Matrix4cd dip =
        h.coupling == 0.0 ? Eigen::Matrix4cd::Identity()
                          : hermitian_exponential(interaction_matrix(r, h.coupling).matrix, half);
    m.pre[i] = dip * zeeman_half;
    m.post[i] = zeeman_half * dip;
  });

  if (m.kinetic) {
    const int n = grid.points_per_axis;
    const double hsp = grid.spacing();
    std::vector<double> lam(n);
    for (int k = 0; k < n; ++k) {
      const double s = std::sin(std::numbers::pi * (k + 1) / (2.0 * (n + 1)));
      lam[k] = 4.0 / (hsp * hsp) * s * s;
    }
    const double norm = 1.0 / std::pow(2.0 * (n + 1), 3);
    m.kinetic_phase_cos.resize(grid.point_count());
    m.kinetic_phase_sin.resize(grid.point_count());
    std::size_t idx = 0;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c, ++idx) {
          const double phase = -grid.dt * 0.5 * grid.kinetic_scale * (lam[a] + lam[b] + lam[c]);
          m.kinetic_phase_cos[idx] = norm * std::cos(phase);
          m.kinetic_phase_sin[idx] = norm * std::sin(phase);
        }
    m.buffer.resize(8 * grid.point_count());
    const int dims[3] = {n, n, n};
    const fftw_r2r_kind kinds[3] = {FFTW_RODFT00, FFTW_RODFT00, FFTW_RODFT00};
    m.plan = fftw_plan_many_r2r(3, dims, 8, m.buffer.data(), nullptr, 8, 1, m.buffer.data(),
                                nullptr, 8, 1, kinds, FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (!m.plan) throw NumericalError("could not create sine-transform plan");
  }
}

Propagator::~Propagator() = default;
Propagator::Propagator(Propagator&&) noexcept = default;
Propagator& Propagator::operator=(Propagator&&) noexcept = default;

void Propagator::step(GridState& state) const {
  const Impl& m = *impl_;
  std::vector<cplx>& amp = state.amplitudes();
  const double before = state.norm();
  const std::size_t points = m.grid.point_count();

  auto apply = [&](const std::vector<Eigen::Matrix4cd>& ops) {
    for (std::size_t p = 0; p < points; ++p) {
      Eigen::Map<Eigen::Vector4cd> v(amp.data() + 4 * p);
      v = ops[p] * v;
    }
  };

  apply(m.pre);
  if (m.kinetic) {
    double* data = reinterpret_cast<double*>(amp.data());
    fftw_execute_r2r(m.plan, data, data);
    for (std::size_t p = 0; p < points; ++p) {
      const double c = m.kinetic_phase_cos[p], s = m.kinetic_phase_sin[p];
      double* v = data + 8 * p;
      for (int spin = 0; spin < 4; ++spin) {
        const double re = v[2 * spin], im = v[2 * spin + 1];
        v[2 * spin] = c * re - s * im;
        v[2 * spin + 1] = s * re + c * im;
      }
    }
    fftw_execute_r2r(m.plan, data, data);
  }
  apply(m.post);

  const double after = state.norm();
  if (!(std::abs(after - before) <= kStepNormDrift)) {
    char msg[64];
    std::snprintf(msg, sizeof msg, "unstable step: norm changed by %.3g", after - before);
    throw NumericalError(msg);
  }
}

GridState evolve(GridState state, const Propagator& propagator, int steps) {
  const int n = steps < 0 ? state.grid().steps : steps;
  for (int i = 0; i < n; ++i) propagator.step(state);
  return state;
}

// ---------------------------------------------------------------------------

Position3 expect_position(const GridState& state) {
  const GridSpec& g = state.grid();
  const auto& amp = state.amplitudes();
  // Offsets from the box center keep the sums well conditioned.
  double sx = 0, sy = 0, sz = 0, total = 0;
  for_each_point(g, [&](std::size_t i, const Position3& r) {
    double w = 0.0;
    for (int s = 0; s < 4; ++s) w += std::norm(amp[4 * i + s]);
    sx += w * (r.x - g.box_center.x);
    sy += w * (r.y - g.box_center.y);
    sz += w * (r.z - g.box_center.z);
    total += w;
  });
  return {g.box_center.x + sx / total, g.box_center.y + sy / total, g.box_center.z + sz / total};
}

double spread_z(const GridState& state) {
  const GridSpec& g = state.grid();
  const auto& amp = state.amplitudes();
  const double mean = expect_position(state).z - g.box_center.z;
  double s = 0, total = 0;
  for_each_point(g, [&](std::size_t i, const Position3& r) {
    double w = 0.0;
    for (int k = 0; k < 4; ++k) w += std::norm(amp[4 * i + k]);
    const double d = r.z - g.box_center.z - mean;
    s += w * d * d;
    total += w;
  });
  return std::sqrt(s / total);
}

double expect_momentum_z(const GridState& state) {
  const GridSpec& g = state.grid();
  const int n = g.points_per_axis;
  const double h = g.spacing();
  const auto& amp = state.amplitudes();
  cplx sum = 0.0;
  double total = 0.0;
  for (std::size_t line = 0; line < g.point_count() / n; ++line) {
    const std::size_t base = line * n;
    for (int iz = 0; iz < n; ++iz) {
      for (int s = 0; s < 4; ++s) {
        const cplx psi = amp[4 * (base + iz) + s];
        const cplx up = iz + 1 < n ? amp[4 * (base + iz + 1) + s] : cplx{};
        const cplx down = iz > 0 ? amp[4 * (base + iz - 1) + s] : cplx{};
        sum += std::conj(psi) * cplx{0.0, -1.0} * (up - down) / (2.0 * h);
        total += std::norm(psi);
      }
    }
  }
  return sum.real() / total;
}

void TimeSeries::write_csv(std::ostream& out) const {
  out << "t,z_expect,norm\n";
  char line[96];
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::snprintf(line, sizeof line, "%.12g,%.12g,%.12g\n", t[i], z[i], norm[i]);
    out << line;
  }
}

TimeSeries run_series(GridState state, const Propagator& propagator, int total_steps,
                      int record_every) {
  if (record_every < 1) throw ValidationError("record_every must be positive");
  TimeSeries ts;
  const double dt = state.grid().dt;
  auto record = [&](int step) {
    ts.t.push_back(step * dt);
    ts.z.push_back(expect_position(state).z);
    ts.norm.push_back(state.norm());
    ts.z_spread.push_back(spread_z(state));
  };
  record(0);
  for (int s = 1; s <= total_steps; ++s) {
    propagator.step(state);
    if (s % record_every == 0) record(s);
  }
  return ts;
}

// ---------------------------------------------------------------------------

QuadraticFit fit_acceleration(const std::vector<double>& t, const std::vector<double>& z) {
  if (t.size() != z.size() || t.size() < 4) {
    throw NumericalError("degenerate fit: need at least four (t, z) samples");
  }
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (!(t[i] > t[i - 1])) throw NumericalError("degenerate fit: t must increase");
  }
  const double window = t.back() - t.front();
  const double scale = std::max(std::abs(t.front()), std::abs(t.back()));
  const Eigen::Index n = static_cast<Eigen::Index>(t.size());
  Eigen::MatrixXd design(n, 3);
  Eigen::VectorXd rhs(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double s = t[i] / scale;
    design(i, 0) = 1.0;
    design(i, 1) = s;
    design(i, 2) = s * s;
    rhs[i] = z[i];
  }
  const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
  if (qr.rank() < 3) throw NumericalError("degenerate fit: rank-deficient design");
  const Eigen::Vector3d c = qr.solve(rhs);
  const Eigen::VectorXd r = rhs - design * c;

  QuadraticFit fit;
  fit.z0 = c[0];
  fit.v0 = c[1] / scale;
  fit.a = 2.0 * c[2] / (scale * scale);
  fit.residual_rms = std::sqrt(r.squaredNorm() / static_cast<double>(n));
  fit.residual_max = r.cwiseAbs().maxCoeff();
  fit.window = window;
  return fit;
}

RemainderScaling remainder_scaling(const TimeSeries& series, const std::vector<double>& windows) {
  if (windows.size() < 2) throw ValidationError("remainder scaling needs at least two windows");
  auto floor_until = [&](std::size_t last) {
    double f = 0.0;
    for (std::size_t i = 0; i <= last; ++i) {
      const double spread = i < series.z_spread.size() ? series.z_spread[i] : std::abs(series.z[i]);
      f = std::max(f, DBL_EPSILON * std::abs(series.z[i]) +
                          std::abs(series.norm[i] - series.norm.front()) * spread);
    }
    return f;
  };

  // Every window is fitted with the same number of samples, taken at a
  // uniform stride, so the sampling itself does not bias the slope.
  std::vector<std::size_t> last;
  for (double w : windows) {
    std::size_t k = 0;
    while (k + 1 < series.t.size() && series.t[k + 1] <= w * (1.0 + 1e-12)) ++k;
    last.push_back(k);
  }
  const std::size_t intervals = *std::min_element(last.begin(), last.end());
  if (intervals < 3) throw NumericalError("degenerate fit: window shorter than four samples");

  RemainderScaling out;
  std::vector<double> lx, ly;
  for (std::size_t wi = 0; wi < windows.size(); ++wi) {
    std::vector<double> t, z;
    for (std::size_t j = 0; j <= intervals; ++j) {
      const std::size_t i = (j * last[wi] + intervals / 2) / intervals;
      t.push_back(series.t[i]);
      z.push_back(series.z[i]);
    }
    const QuadraticFit fit = fit_acceleration(t, z);
    const double floor = floor_until(last[wi]);
    if (fit.residual_rms < 10.0 * floor) {
      char msg[160];
      std::snprintf(msg, sizeof msg,
                    "below resolution: quadratic-fit residual %.3g at window %.3g is under ten "
                    "times the noise floor %.3g",
                    fit.residual_rms, t.back(), floor);
      throw NumericalError(msg);
    }
    out.windows.push_back(t.back());
    out.residuals.push_back(fit.residual_rms);
    lx.push_back(std::log(t.back()));
    ly.push_back(std::log(fit.residual_rms));
  }
  out.exponent = slope(lx, ly);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

using Line = std::vector<cplx>;

// p = -i d/dz, central differences, zero outside the line.
Line apply_p(const Line& psi, double h) {
  const std::size_t n = psi.size();
  Line out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const cplx up = i + 1 < n ? psi[i + 1] : cplx{};
    const cplx down = i > 0 ? psi[i - 1] : cplx{};
    out[i] = cplx{0.0, -1.0} * (up - down) / (2.0 * h);
  }
  return out;
}

// sum_k c_k p^k psi
Line apply_poly_p(const std::vector<double>& c, const Line& psi, double h) {
  Line out(psi.size()), power = psi;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k > 0) power = apply_p(power, h);
    for (std::size_t i = 0; i < psi.size(); ++i) out[i] += c[k] * power[i];
  }
  return out;
}

double poly(const std::vector<double>& c, double x) {
  double v = 0.0;
  for (std::size_t k = c.size(); k-- > 0;) v = v * x + c[k];
  return v;
}

std::vector<double> derivative(const std::vector<double>& c) {
  std::vector<double> d;
  for (std::size_t k = 1; k < c.size(); ++k) d.push_back(static_cast<double>(k) * c[k]);
  if (d.empty()) d.push_back(0.0);
  return d;
}

}  // namespace

double canonical_commutator_check(const std::vector<double>& coefficients,
                                  CommutatorVariable variable, int points) {
  if (coefficients.empty() || coefficients.size() > 4) {
    throw ValidationError("commutator check takes a polynomial of degree <= 3");
  }
  if (points < 8) throw ValidationError("commutator check needs at least 8 points");
  constexpr double center = 0.4, half = 0.05, sigma = 0.008;
  const double h = 2.0 * half / (points + 1);
  std::vector<double> z(points);
  Line psi(points);
  double total = 0.0;
  for (int i = 0; i < points; ++i) {
    z[i] = center - half + (i + 1) * h;
    const double d = z[i] - center;
    psi[i] = std::exp(-d * d / (4.0 * sigma * sigma));
    total += std::norm(psi[i]) * h;
  }
  for (cplx& v : psi) v /= std::sqrt(total);

  const std::vector<double> dc = derivative(coefficients);
  Line residual(points);
  if (variable == CommutatorVariable::position) {
    // [g, p] psi = g p psi - p (g psi)
    Line g_psi(points);
    for (int i = 0; i < points; ++i) g_psi[i] = poly(coefficients, z[i]) * psi[i];
    const Line p_psi = apply_p(psi, h);
    const Line p_gpsi = apply_p(g_psi, h);
    for (int i = 0; i < points; ++i) {
      residual[i] = poly(coefficients, z[i]) * p_psi[i] - p_gpsi[i] -
                    cplx{0.0, 1.0} * poly(dc, z[i]) * psi[i];
    }
  } else {
    // [z, f(p)] psi = z f(p) psi - f(p) (z psi)
    Line z_psi(points);
    for (int i = 0; i < points; ++i) z_psi[i] = z[i] * psi[i];
    const Line f_psi = apply_poly_p(coefficients, psi, h);
    const Line f_zpsi = apply_poly_p(coefficients, z_psi, h);
    const Line df_psi = apply_poly_p(dc, psi, h);
    for (int i = 0; i < points; ++i) {
      residual[i] = z[i] * f_psi[i] - f_zpsi[i] - cplx{0.0, 1.0} * df_psi[i];
    }
  }
  double s = 0.0;
  for (const cplx& r : residual) s += std::norm(r) * h;
  return std::sqrt(s);
}

double commutator_convergence_order(const std::vector<double>& coefficients,
                                    CommutatorVariable variable, const std::vector<int>& points) {
  if (points.size() < 2) throw ValidationError("convergence order needs at least two grids");
  std::vector<double> lh, lr;
  for (int n : points) {
    const double r = canonical_commutator_check(coefficients, variable, n);
    if (!(r > 0.0)) throw NumericalError("below resolution: commutator residual is zero");
    lh.push_back(std::log(1.0 / (n + 1)));
    lr.push_back(std::log(r));
  }
  return slope(lh, lr);
}

}  // namespace qsg
