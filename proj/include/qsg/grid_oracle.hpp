#pragma once

// Brute-force check of the perturbative force: the four-component
// particle-loop wavefunction is evolved on a 3-D grid and <z(t)> is fitted.
//
// In natural units (positions in l, time in tau, energies in m l^2/tau^2) the
// Schrodinger equation reads
//
//   i dPsi/dt = [ -(kappa/2) Lap_h + (g V_dip(r) + Z) / kappa ] Psi,
//
// with kappa = hbar tau/(m l^2), Lap_h the second-order finite-difference
// Laplacian with Dirichlet walls, V_dip the interaction_hamiltonian field and
// Z a constant Zeeman term. Time stepping is Strang splitting; the kinetic
// factor is applied exactly in the sine basis that diagonalizes Lap_h, and the
// potential factors are exact pointwise 4x4 exponentials, so each step is
// unitary.

#include <memory>
#include <ostream>
#include <vector>

#include "qsg/spin_algebra.hpp"
#include "qsg/wavepacket.hpp"

namespace qsg {

struct GridSpec {
  int points_per_axis = 32;
  Position3 box_center{0.0, 0.0, 0.4};
  double box_half_width = 0.05;
  double dt = 1e-7;
  int steps = 0;
  double kinetic_scale = 1.0;

  /// Interior spacing; the walls sit one spacing beyond the outermost points.
  double spacing() const { return 2.0 * box_half_width / (points_per_axis + 1); }
  /// Coordinate of grid index i (0-based) along `axis`.
  double coordinate(int axis, int i) const;
  std::size_t point_count() const;
  /// Throws ValidationError if the box can reach the origin or the sizes are
  /// not positive.
  void validate() const;
};

struct GridHamiltonian {
  bool kinetic = true;
  /// Multiplies the dipole interaction; 0 switches it off.
  double coupling = 1.0;
  /// Spatially constant spin term in natural energy units.
  TwoSpinOperator zeeman{Eigen::Matrix4cd::Zero()};

  static GridHamiltonian full(double coupling, const TwoSpinOperator& zeeman);
  static GridHamiltonian free_particle();
  static GridHamiltonian zeeman_only(const TwoSpinOperator& zeeman);
  static GridHamiltonian zero();
};

/// Accuracy bound on the step: dt * (spectral radius of the kinetic and
/// dipole parts) must not exceed this. The constant Zeeman factor is applied
/// exactly and is excluded.
inline constexpr double kMaxPhasePerStep = 1.0;

/// Largest dt satisfying kMaxPhasePerStep for this grid and Hamiltonian.
double max_stable_dt(const GridSpec& grid, const GridHamiltonian& h);

class GridState {
 public:
  GridState(const GridSpec& grid, std::vector<cplx> amplitudes);

  const GridSpec& grid() const { return grid_; }
  /// Layout: ((ix * N + iy) * N + iz) * 4 + spin.
  const std::vector<cplx>& amplitudes() const { return amplitudes_; }
  std::vector<cplx>& amplitudes() { return amplitudes_; }
  double norm() const;
  /// Reduced spin density matrix, traced over position.
  Eigen::Matrix4cd spin_density() const;

 private:
  GridSpec grid_;
  std::vector<cplx> amplitudes_;
};

/// Packet density sampled on the grid, times exp(i k z) with
/// k = velocity_z / kappa, tensored with the spin state; unit discrete norm.
/// Throws ValidationError unless the packet support stays two cells inside
/// the walls.
GridState initialize(const WavePacket& packet, const SpinState& spin, const GridSpec& grid,
                     double velocity_z = 0.0);

/// Precomputed step operators for one grid and Hamiltonian.
class Propagator {
 public:
  /// Throws NumericalError if grid.dt violates the accuracy bound.
  Propagator(const GridSpec& grid, const GridHamiltonian& h);
  ~Propagator();
  Propagator(Propagator&&) noexcept;
  Propagator& operator=(Propagator&&) noexcept;

  /// Advances by grid.dt. Throws NumericalError("unstable step") if the norm
  /// changes by more than 1e-6.
  void step(GridState& state) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Advances `state` by `steps` steps (grid.steps if negative).
GridState evolve(GridState state, const Propagator& propagator, int steps = -1);

Position3 expect_position(const GridState& state);
/// Standard deviation of z under |Psi|^2.
double spread_z(const GridState& state);
/// <p_z> with the central-difference stencil, in units of hbar / l.
double expect_momentum_z(const GridState& state);

struct TimeSeries {
  std::vector<double> t;
  std::vector<double> z;
  std::vector<double> norm;
  std::vector<double> z_spread;  // rms width of |Psi|^2 along z; not exported

  void write_csv(std::ostream& out) const;
};

/// Records (t, <z>, norm) at t = 0 and after every `record_every` steps.
TimeSeries run_series(GridState state, const Propagator& propagator, int total_steps,
                      int record_every);

struct QuadraticFit {
  double z0 = 0.0;
  double v0 = 0.0;
  double a = 0.0;
  double residual_rms = 0.0;
  double residual_max = 0.0;
  double window = 0.0;
  /// Any two quadratics that both stay within residual_max of the data over
  /// the window differ in initial velocity and in acceleration by at most
  /// these amounts (Markov's inequality for degree-2 polynomials).
  double v0_tolerance() const { return 16.0 * residual_max / window; }
  double a_tolerance() const { return 32.0 * residual_max / (window * window); }
};

/// Least-squares fit of z0 + v0 t + a t^2/2. Throws NumericalError for fewer
/// than four samples, non-increasing t, or a rank-deficient design.
QuadraticFit fit_acceleration(const std::vector<double>& t, const std::vector<double>& z);

struct RemainderScaling {
  double exponent = 0.0;
  std::vector<double> windows;
  std::vector<double> residuals;  // rms residual of the quadratic fit per window
};

/// Log-log slope of the quadratic-fit residual against the window length.
/// Every window is refitted with the same sample count. Throws
/// NumericalError("below resolution") if a residual falls under ten times the
/// floor set by norm drift (times the packet spread) and rounding of <z>.
RemainderScaling remainder_scaling(const TimeSeries& series, const std::vector<double>& windows);

enum class CommutatorVariable { position, momentum };

/// Residual norm of a canonical identity on a 1-D grid of `points` points:
///   position: || [g(z), p] psi - i g'(z) psi ||
///   momentum: || [z, f(p)] psi - i f'(p) psi ||
/// with p = -i d/dz by central differences, polynomial coefficients in
/// ascending order (degree <= 3), and a smooth Gaussian test packet.
double canonical_commutator_check(const std::vector<double>& coefficients,
                                  CommutatorVariable variable, int points);

/// Observed order from residuals at spacings h and h/2 for each consecutive
/// pair of `points` values (each must be 2*(previous+1)-1).
double commutator_convergence_order(const std::vector<double>& coefficients,
                                    CommutatorVariable variable, const std::vector<int>& points);

}  // namespace qsg
