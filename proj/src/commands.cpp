#include "qsg/commands.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "qsg/deflection.hpp"
#include "qsg/dipole.hpp"
#include "qsg/error.hpp"
#include "qsg/trajectory.hpp"

namespace qsg {

using nlohmann::json;

namespace {

double round12(double x) {
  if (!std::isfinite(x) || x == 0.0) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

std::filesystem::path prepare_dir(const RunConfig& c) {
  std::filesystem::path dir(c.out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw ValidationError("cannot create output directory " + c.out_dir + ": " + ec.message());
  return dir;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + path.string());
  return out;
}

void write_json(const std::filesystem::path& path, const json& j) {
  open_out(path) << j.dump(2) << '\n';
}

double coupling(const RunConfig& c) { return c.params.coupling_sign(); }

SpinInput figure2_spin(const RunConfig& c) {
  return parse_spin(c.figure2.antiparallel ? antiparallel_partner(c.figure2.spin) : c.figure2.spin);
}

// Average over the lobe around y = 0, whatever its sign; null when the
// profile vanishes there.
json central_lobe_average(const AccelerationProfile& p) {
  const AccelerationSample* center = &p.samples.front();
  for (const auto& s : p.samples) {
    if (std::abs(s.y) < std::abs(center->y)) center = &s;
  }
  if (center->a_z == 0.0) return nullptr;
  if (center->a_z < 0.0) return region_average(p);
  AccelerationProfile flipped = p;
  for (auto& s : flipped.samples) s.a_z = -s.a_z;
  return -region_average(flipped);
}

double point_acceleration(const SpinInput& spin, const ProfileSweep& s, double y, double g) {
  const WavePacket packet{{s.x, y, s.z}, s.width, s.profile};
  const auto keys = force_moment_keys();
  return contract_force(spin, moments(packet, keys), g).a_z;
}

}  // namespace

json rounded(json j) {
  if (j.is_number_float()) return round12(j.get<double>());
  if (j.is_array() || j.is_object()) {
    for (auto& v : j) v = rounded(v);
  }
  return j;
}

// ---------------------------------------------------------------------------

double central_lobe_width(const AccelerationProfile& profile) {
  const std::vector<double> roots = zero_crossings(profile);
  double left = -INFINITY, right = INFINITY;
  int n_left = 0, n_right = 0;
  for (double r : roots) {
    if (r < 0.0) {
      left = std::max(left, r);
      ++n_left;
    } else {
      right = std::min(right, r);
      ++n_right;
    }
  }
  if (n_left != 1 || n_right != 1) {
    throw NumericalError("central lobe is not bounded by one crossing on each side");
  }
  return right - left;
}

Figure2Result run_figure2(const RunConfig& c) {
  const double g = coupling(c);
  const SpinInput spin = figure2_spin(c);
  Figure2Result r;
  r.profile = acceleration_profile(spin, c.figure2.sweep, g);

  const json average = central_lobe_average(r.profile);
  const double reference =
      c.figure2.antiparallel ? -kReferenceAverageAcceleration : kReferenceAverageAcceleration;
  json crossings = json::array();
  for (double y : zero_crossings(r.profile)) crossings.push_back(y);
  json width = nullptr;
  try {
    width = central_lobe_width(r.profile);
  } catch (const NumericalError&) {
  }

  // The coherent and mixed readings of the parallel state differ by the
  // <z (x^2 - y^2) / r^7> cross term; report both.
  const ProfileSweep& s = c.figure2.sweep;
  const AccelerationProfile coherent = acceleration_profile(parallel_coherent(), s, g);
  const AccelerationProfile mixed = acceleration_profile(parallel_mixture(), s, g);
  double max_diff = 0.0;
  for (std::size_t i = 0; i < coherent.samples.size(); ++i) {
    max_diff = std::max(max_diff, std::abs(coherent.samples[i].a_z - mixed.samples[i].a_z));
  }

  r.summary = {
      {"spin", c.figure2.antiparallel ? antiparallel_partner(c.figure2.spin) : c.figure2.spin},
      {"antiparallel", c.figure2.antiparallel},
      {"x", s.x},
      {"z", s.z},
      {"width", s.width},
      {"samples", s.samples},
      {"a_z_at_y0", point_acceleration(spin, s, 0.0, g)},
      {"average", average},
      {"reference_average", reference},
      {"average_relative_difference",
       average.is_null() ? json(nullptr) : json(average.get<double>() / reference - 1.0)},
      {"crossings", crossings},
      {"central_lobe_width", width},
      {"parallel_state_readings",
       {{"coherent_average", central_lobe_average(coherent)},
        {"mixture_average", central_lobe_average(mixed)},
        {"max_abs_difference", max_diff}}},
  };
  return r;
}

json cmd_figure2(const RunConfig& c) {
  const Figure2Result r = run_figure2(c);
  const auto dir = prepare_dir(c);
  {
    std::ofstream out = open_out(dir / "figure2.csv");
    write_profile_csv(out, r.profile);
  }
  const json summary = rounded(r.summary);
  write_json(dir / "figure2.json", summary);
  return summary;
}

// ---------------------------------------------------------------------------

json run_deflect(const RunConfig& c) {
  json report = {
      {"alpha", c.params.alpha},
      {"beta", c.params.beta},
      {"mass_kg", c.params.mass},
      {"loop_current_a", c.loop_current},
      {"loop_radius_m", c.loop_radius},
      {"tau_s", c.tau},
      {"thermal_speed_rms_m_per_s", thermal_speed(c.beam.temperature, codata::hydrogen_atom_mass)},
      {"reference_length_unit_order_m", 1e-5},
      {"reference_deflection_order_m", 1e-15},
      {"reference_interaction_time_order_s", 1e-8},
  };

  // Without a loop current there is no interaction and nothing to deflect.
  if (c.params.alpha * c.params.beta == 0.0) {
    report["interaction"] = false;
    report["speed_m_per_s"] = c.beam.speed;
    report["deflection_m"] = 0.0;
    report["direction"] = 0;
    report["separation_ratio"] = 0.0;
    json sweep = json::array();
    for (double v : c.beam.speed_sweep) sweep.push_back({{"speed_m_per_s", v}, {"deflection_m", 0.0}});
    report["speed_sweep"] = sweep;
    return report;
  }

  const NaturalUnits units = c.units();
  const Figure2Result fig = run_figure2(c);
  const json avg = fig.summary.at("average");
  if (avg.is_null()) throw NumericalError("profile has no central lobe to average over");
  const double a_nat = avg.get<double>();
  const double width = central_lobe_width(fig.profile);

  const DeflectionEstimate e = estimate(c.params, c.tau, c.beam.speed, a_nat, width);
  report["interaction"] = true;
  report["beta_over_alpha"] = c.params.beta / c.params.alpha;
  report["kappa"] = kinetic_scale(c.params, units);
  report.update(to_json(e));
  report["separation_ratio"] = separation_vs_packet(e.deflection, c.beam.packet_width);
  report["packet_width_m"] = c.beam.packet_width;

  json sweep = json::array();
  for (double v : c.beam.speed_sweep) {
    const DeflectionEstimate ev = estimate(c.params, c.tau, v, a_nat, width);
    sweep.push_back({{"speed_m_per_s", v},
                     {"interaction_time_s", ev.interaction_time},
                     {"deflection_m", ev.deflection}});
  }
  report["speed_sweep"] = sweep;
  return report;
}

json cmd_deflect(const RunConfig& c) {
  const json report = rounded(run_deflect(c));
  write_json(prepare_dir(c) / "deflect.json", report);
  return report;
}

// ---------------------------------------------------------------------------

EPRResult run_epr(const RunConfig& c) {
  const EPRScenario& s = c.epr.scenario;
  EPRResult r;
  r.sweep = correlation_sweep(c.epr.p_grid, s.bell, s.loops);

  const JointDistribution d = joint_distribution(s);
  EPRScenario other = s;
  other.loops = s.loops == LoopRepresentation::coherent ? LoopRepresentation::mixture
                                                        : LoopRepresentation::coherent;
  const auto other_sweep = correlation_sweep(c.epr.p_grid, s.bell, other.loops);
  double rep_diff = 0.0;
  for (std::size_t i = 0; i < r.sweep.size(); ++i) {
    rep_diff = std::max(rep_diff,
                        std::abs(r.sweep[i].cond_up_given_down - other_sweep[i].cond_up_given_down));
  }

  auto cond_json = [&](Wing w, Outcome o) -> json {
    if (!(d.marginal(w, o) > 0.0)) return nullptr;
    const Conditional k = conditional(d, w, o);
    return {{"up", k.up}, {"down", k.down}};
  };
  r.summary = {
      {"bell", to_string(s.bell)},
      {"p1_up", s.p1_up},
      {"p2_up", s.p2_up},
      {"loops", s.loops == LoopRepresentation::coherent ? "coherent" : "mixture"},
      {"joint",
       {{"up_up", d(Outcome::up, Outcome::up)},
        {"up_down", d(Outcome::up, Outcome::down)},
        {"down_up", d(Outcome::down, Outcome::up)},
        {"down_down", d(Outcome::down, Outcome::down)}}},
      {"wing1_down", d.marginal(Wing::one, Outcome::down)},
      {"wing2_up", d.marginal(Wing::two, Outcome::up)},
      {"wing2_given_wing1_down", cond_json(Wing::one, Outcome::down)},
      {"wing2_given_wing1_up", cond_json(Wing::one, Outcome::up)},
      {"representation_max_abs_difference", rep_diff},
  };
  return r;
}

json cmd_epr(const RunConfig& c) {
  const EPRResult r = run_epr(c);
  const auto dir = prepare_dir(c);
  {
    std::ofstream out = open_out(dir / "epr.csv");
    write_sweep_csv(out, r.sweep);
  }
  const json summary = rounded(r.summary);
  write_json(dir / "epr.json", summary);
  return summary;
}

// ---------------------------------------------------------------------------

namespace {

double max_norm_drift(const TimeSeries& s) {
  double d = 0.0;
  for (double n : s.norm) d = std::max(d, std::abs(n - 1.0));
  return d;
}

}  // namespace

OracleResult run_oracle(const RunConfig& c) {
  const OracleConfig& o = c.oracle;
  const NaturalUnits units = c.units();
  const double kappa = kinetic_scale(c.params, units);
  const double g = coupling(c);

  GridSpec grid;
  grid.points_per_axis = o.points_per_axis;
  grid.box_center = o.center;
  grid.box_half_width = o.box_half_width;
  grid.dt = o.dt;
  grid.kinetic_scale = kappa;
  grid.validate();

  const SpinState spin = std::get<SpinState>(parse_spin(o.spin));
  const WavePacket packet{o.center, o.packet_sigma, PacketProfile::gaussian};
  const auto keys = force_moment_keys();
  const double bch = contract_force(spin, moments(packet, keys), g).a_z;

  const TwoSpinOperator no_zeeman{Eigen::Matrix4cd::Zero()};
  const Propagator full(grid, GridHamiltonian::full(g, no_zeeman));
  const int kick_steps = static_cast<int>(std::lround(o.windows.back() / o.dt));
  if (kick_steps < 4) throw ValidationError("oracle windows are shorter than four steps");

  OracleResult r;
  double drift = 0.0;

  // Zero-momentum run: acceleration and velocity.
  const GridState rest = initialize(packet, spin, grid);
  r.rest_series = run_series(rest, full, o.accel_steps, 1);
  drift = std::max(drift, max_norm_drift(r.rest_series));
  const QuadraticFit rest_fit = fit_acceleration(r.rest_series.t, r.rest_series.z);
  const double rest_v = kappa * expect_momentum_z(rest);
  const double rel = rest_fit.a / bch - 1.0;

  json report = {
      {"kappa", kappa},
      {"coupling", g},
      {"grid",
       {{"points_per_axis", grid.points_per_axis},
        {"spacing", grid.spacing()},
        {"box_half_width", grid.box_half_width},
        {"center", {o.center.x, o.center.y, o.center.z}},
        {"dt", grid.dt},
        {"max_stable_dt", max_stable_dt(grid, GridHamiltonian::full(g, no_zeeman))}}},
      {"packet_sigma", o.packet_sigma},
      {"spin", o.spin},
      {"bch_acceleration", bch},
      {"rest",
       {{"steps", o.accel_steps},
        {"window", rest_fit.window},
        {"fit_acceleration", rest_fit.a},
        {"relative_error", rel},
        {"residual_max", rest_fit.residual_max},
        {"acceleration_tolerance", rest_fit.a_tolerance()},
        {"fit_velocity", rest_fit.v0},
        {"expected_velocity", rest_v},
        {"velocity_tolerance", rest_fit.v0_tolerance()}}},
  };
  json checks = {
      {"acceleration_within_5pct", std::abs(rel) <= 0.05},
      {"rest_velocity_within_residual",
       std::abs(rest_fit.v0 - rest_v) <= rest_fit.v0_tolerance()},
  };

  if (o.zeeman_check) {
    const TwoSpinOperator z = zeeman_term_natural(c.params, units);
    const Propagator with_b(grid, GridHamiltonian::full(g, z));
    const TimeSeries s = run_series(rest, with_b, o.accel_steps, 1);
    drift = std::max(drift, max_norm_drift(s));
    const QuadraticFit f = fit_acceleration(s.t, s.z);
    const double change = f.a - rest_fit.a;
    report["zeeman"] = {{"B0", c.params.B0},
                        {"fit_acceleration", f.a},
                        {"change", change},
                        {"acceleration_tolerance", rest_fit.a_tolerance()}};
    checks["zeeman_change_below_residual"] = std::abs(change) <= rest_fit.a_tolerance();

    const Propagator only(grid, GridHamiltonian::zeeman_only(z));
    const TimeSeries so = run_series(rest, only, o.accel_steps, 1);
    drift = std::max(drift, max_norm_drift(so));
    const QuadraticFit fo = fit_acceleration(so.t, so.z);
    report["zeeman_only"] = {{"fit_acceleration", fo.a},
                             {"acceleration_tolerance", fo.a_tolerance()}};
    checks["zeeman_only_no_acceleration"] = std::abs(fo.a) <= fo.a_tolerance();
  }

  // Moving packet: the jerk v da/dz makes the remainder cubic.
  const GridState kicked = initialize(packet, spin, grid, o.kick_velocity);
  const double kick_v = kappa * expect_momentum_z(kicked);
  r.kick_series = run_series(kicked, full, kick_steps, 1);
  drift = std::max(drift, max_norm_drift(r.kick_series));
  const QuadraticFit kick_fit = fit_acceleration(r.kick_series.t, r.kick_series.z);
  const RemainderScaling scaling = remainder_scaling(r.kick_series, o.windows);
  report["kick"] = {{"initial_velocity", o.kick_velocity},
                    {"steps", kick_steps},
                    {"fit_velocity", kick_fit.v0},
                    {"expected_velocity", kick_v},
                    {"velocity_tolerance", kick_fit.v0_tolerance()},
                    {"fit_acceleration", kick_fit.a},
                    {"remainder_exponent", scaling.exponent},
                    {"windows", scaling.windows},
                    {"residuals", scaling.residuals}};
  checks["kick_velocity_within_residual"] =
      std::abs(kick_fit.v0 - kick_v) <= kick_fit.v0_tolerance();
  checks["remainder_exponent_3_pm_0.3"] = std::abs(scaling.exponent - 3.0) <= 0.3;

  {
    const Propagator scaled(grid, GridHamiltonian::full(g * o.coupling_scale, no_zeeman));
    const TimeSeries s = run_series(kicked, scaled, kick_steps, 1);
    drift = std::max(drift, max_norm_drift(s));
    const RemainderScaling rs = remainder_scaling(s, o.windows);
    const double ratio = rs.residuals.back() / scaling.residuals.back();
    report["coupling_scaled"] = {{"scale", o.coupling_scale},
                                 {"residuals", rs.residuals},
                                 {"residual_ratio_at_largest_window", ratio}};
    checks["cubic_grows_with_coupling"] = ratio > 1.0;
  }

  {
    const Propagator free(grid, GridHamiltonian::free_particle());
    const TimeSeries s = run_series(kicked, free, kick_steps, 1);
    drift = std::max(drift, max_norm_drift(s));
    std::string outcome;
    try {
      const RemainderScaling rs = remainder_scaling(s, o.windows);
      outcome = "exponent " + std::to_string(rs.exponent);
    } catch (const NumericalError& e) {
      outcome = e.what();
    }
    const bool floor = outcome.rfind("below resolution", 0) == 0;
    report["free_particle"] = {{"remainder", floor ? "below resolution" : outcome}};
    checks["free_particle_below_resolution"] = floor;
  }

  report["max_norm_drift"] = drift;
  checks["norm_drift_below_1e-8"] = drift < 1e-8;
  bool all = true;
  for (const auto& item : checks.items()) all = all && item.value().get<bool>();
  report["checks"] = checks;
  report["pass"] = all;
  r.report = report;
  return r;
}

json cmd_oracle(const RunConfig& c) {
  const OracleResult r = run_oracle(c);
  const auto dir = prepare_dir(c);
  {
    std::ofstream out = open_out(dir / "oracle_rest_series.csv");
    r.rest_series.write_csv(out);
  }
  {
    std::ofstream out = open_out(dir / "oracle_kick_series.csv");
    r.kick_series.write_csv(out);
  }
  const json report = rounded(r.report);
  write_json(dir / "oracle.json", report);
  return report;
}

// ---------------------------------------------------------------------------

namespace {

std::string fmt(const char* f, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

}  // namespace

std::vector<SelftestCheck> run_selftest(const RunConfig& c) {
  std::vector<SelftestCheck> out;
  auto add = [&](std::string name, auto&& body) {
    SelftestCheck chk{std::move(name), false, ""};
    try {
      body(chk);
    } catch (const std::exception& e) {
      chk.pass = false;
      chk.detail = std::string("error: ") + e.what();
    }
    out.push_back(std::move(chk));
  };

  add("su2 commutators", [&](SelftestCheck& k) {
    double worst = 0.0;
    for (int i = 0; i < 3; ++i) {
      const auto a = spin_generator(kAxes[i]).matrix;
      const auto b = spin_generator(kAxes[(i + 1) % 3]).matrix;
      const auto cz = spin_generator(kAxes[(i + 2) % 3]).matrix;
      worst = std::max(worst, (commutator(a, b) - cplx{0, 1} * cz).cwiseAbs().maxCoeff());
    }
    k.pass = worst < 1e-12;
    k.detail = fmt("max deviation %.3g", worst);
  });

  add("spin_dot spectrum", [&](SelftestCheck& k) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(spin_dot().matrix);
    const Eigen::Vector4d want(-0.75, 0.25, 0.25, 0.25);
    const double dev = (es.eigenvalues() - want).cwiseAbs().maxCoeff();
    k.pass = dev < 1e-12;
    k.detail = fmt("max deviation %.3g", dev);
  });

  add("force equals -dH/dz", [&](SelftestCheck& k) {
    const Position3 r{0.13, -0.21, 0.37};
    const auto f = force_matrix(r, 1.0).matrix;
    double e[2];
    const double hs[2] = {1e-3, 5e-4};
    for (int i = 0; i < 2; ++i) {
      const double h = hs[i];
      const auto d = (interaction_matrix({r.x, r.y, r.z + h}, 1.0).matrix -
                      interaction_matrix({r.x, r.y, r.z - h}, 1.0).matrix) /
                     (2 * h);
      e[i] = (f + d).cwiseAbs().maxCoeff();
    }
    const double order = std::log2(e[0] / e[1]);
    k.pass = std::abs(order - 2.0) <= 0.2;
    k.detail = fmt("order %.3f", order);
  });

  RunConfig fig = c;
  fig.figure2.spin = "up-up";
  fig.figure2.antiparallel = false;
  Figure2Result f;
  add("figure2 profile", [&](SelftestCheck& k) {
    f = run_figure2(fig);
    const double a0 = f.summary["a_z_at_y0"].get<double>();
    const double avg = f.summary["average"].get<double>();
    const double w = f.summary["central_lobe_width"].get<double>();
    k.pass = std::abs(a0 / -4.6627 - 1) < 0.01 && std::abs(avg / -2.22 - 1) < 0.1 &&
             std::abs(w / 2 - 0.4 * std::sqrt(2.0 / 3.0)) < 0.005;
    k.detail = fmt("a(0) %.5f, average %.4f", a0, avg) + fmt(", lobe width %.4f", w);
  });

  add("antiparallel symmetry", [&](SelftestCheck& k) {
    RunConfig anti = fig;
    anti.figure2.antiparallel = true;
    const Figure2Result a = run_figure2(anti);
    double worst = 0.0;
    for (std::size_t i = 0; i < a.profile.samples.size(); ++i) {
      const double p = f.profile.samples.at(i).a_z, q = a.profile.samples[i].a_z;
      worst = std::max(worst, std::abs(p + q) / std::max(std::abs(p), 1e-300));
    }
    k.pass = worst <= 1e-10;
    k.detail = fmt("max relative deviation %.3g", worst);
  });

  add("classical dipole limit", [&](SelftestCheck& k) {
    // On-axis narrow packet against the classical on-axis force, both in SI.
    const NaturalUnits u = c.units();
    const WavePacket p{{0, 0, 0.4}, 1e-4, PacketProfile::square};
    const auto keys = force_moment_keys();
    const double a = contract_force(basis_state(Spin::up, Spin::up), moments(p, keys),
                                    c.params.coupling_sign()).a_z;
    const double force = from_natural(a, Dimension::acceleration, u) * c.params.mass;
    const double m1 = c.params.alpha * c.params.hbar / 2, m2 = c.params.beta * c.params.hbar / 2;
    const double classical = classical_dipole_force(m1, m2, 0.4 * u.length, c.params.mu0);
    const double rel = force / classical - 1.0;
    k.pass = std::abs(rel) < 0.005;
    k.detail = fmt("relative difference %.3g", rel);
  });

  add("deflection estimate bands", [&](SelftestCheck& k) {
    const json d = run_deflect(c);
    const double l = d["length_unit_m"], ba = d["beta_over_alpha"], dz = d["deflection_m"],
                 t = d["interaction_time_s"];
    k.pass = l >= 3e-6 && l <= 3e-5 && ba >= 2e5 && ba <= 2e6 && dz >= 1e-16 && dz <= 1e-14 &&
             t >= 1e-9 && t <= 1e-7;
    k.detail = fmt("l %.3g m, deflection %.3g m", l, dz) + fmt(", time %.3g s", t);
  });

  add("canonical commutator order", [&](SelftestCheck& k) {
    const std::vector<int> pts{63, 127, 255};
    const double op = commutator_convergence_order({0, 0, 1}, CommutatorVariable::position, pts);
    const double om = commutator_convergence_order({0, 0, 1}, CommutatorVariable::momentum, pts);
    k.pass = std::abs(op - 2) <= 0.2 && std::abs(om - 2) <= 0.2;
    k.detail = fmt("g(z)=z^2 order %.3f, f(p)=p^2 order %.3f", op, om);
  });

  add("epr correlations", [&](SelftestCheck& k) {
    const JointDistribution d = joint_distribution({BellState::singlet, 0.1, 0.1});
    const double down = d.marginal(Wing::one, Outcome::down);
    const double cond = conditional(d, Wing::one, Outcome::down).up;
    k.pass = std::abs(down - 0.5) < 1e-12 && std::abs(cond - 0.82) < 1e-9;
    k.detail = fmt("P(down@1) %.12f, P(up@2|down@1) %.12f", down, cond);
  });

  add("grid oracle", [&](SelftestCheck& k) {
    const OracleResult r = run_oracle(c);
    k.pass = r.report["pass"].get<bool>();
    k.detail = fmt("relative error %.4f, exponent %.3f", r.report["rest"]["relative_error"],
                   r.report["kick"]["remainder_exponent"]);
    for (const auto& item : r.report["checks"].items()) {
      if (!item.value().get<bool>()) k.detail += ", failed " + item.key();
    }
  });
  return out;
}

json cmd_selftest(const RunConfig& c) {
  const auto checks = run_selftest(c);
  json list = json::array();
  bool all = true;
  for (const auto& k : checks) {
    list.push_back({{"name", k.name}, {"pass", k.pass}, {"detail", k.detail}});
    all = all && k.pass;
  }
  const json report = {{"checks", list}, {"pass", all}};
  write_json(prepare_dir(c) / "selftest.json", report);
  return report;
}

}  // namespace qsg
