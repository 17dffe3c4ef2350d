#pragma once

// Run configuration: a JSON document overlaid on the "paper-sec4" preset.
// Every object rejects keys it does not know; see config/schema.json.

#include <string>
#include <vector>

#include <json.hpp>

#include "qsg/epr.hpp"
#include "qsg/profile.hpp"
#include "qsg/units.hpp"

namespace qsg {

struct BeamConfig {
  double speed = kPresetSpeed;                           // m/s
  std::vector<double> speed_sweep{250.0, 500.0, 1e3, 2e3, 4e3};  // m/s
  double temperature = kPresetOvenTemperature;           // K, reported via thermal_speed
  double packet_width = 1e-10;                          // m, screen-side packet width
};

struct Figure2Config {
  ProfileSweep sweep;
  std::string spin = "up-up";
  bool antiparallel = false;  // replace the spin by its antiparallel partner
};

struct OracleConfig {
  int points_per_axis = 32;
  double box_half_width = 0.05;
  double dt = 1e-7;
  double packet_sigma = 0.00625;  // gaussian packet, natural length
  Position3 center{0.0, 0.0, 0.4};
  std::string spin = "up-up";
  int accel_steps = 192;          // zero-momentum run
  double kick_velocity = 100.0;   // natural velocity of the remainder-scaling run
  std::vector<double> windows{9.6e-6, 1.92e-5, 3.84e-5};
  bool zeeman_check = true;
  double coupling_scale = 2.0;    // monotonicity run multiplies the coupling by this
};

struct EPRConfig {
  EPRScenario scenario;
  std::vector<double> p_grid;  // defaults to 0.01, 0.02, ..., 0.99
};

struct RunConfig {
  std::string preset = "paper-sec4";
  PhysicalParams params;
  double loop_current = kPresetLoopCurrent;
  double loop_radius = kPresetLoopRadius;
  double tau = kPresetTau;
  BeamConfig beam;
  Figure2Config figure2;
  OracleConfig oracle;
  EPRConfig epr;
  std::string out_dir = "out";

  /// Natural units for params and tau.
  NaturalUnits units() const { return derive_length_unit(params, tau); }
  double kappa() const { return kinetic_scale(params, units()); }
};

/// The preset alone. Throws ValidationError for an unknown preset name.
RunConfig preset_config(const std::string& name);

/// Overlays `doc` on the preset it names (or "paper-sec4"). Throws
/// ValidationError on unknown keys, wrong types or invalid values.
RunConfig parse_config(const nlohmann::json& doc);
RunConfig load_config(const std::string& path);

/// Effective configuration, as written next to the outputs.
nlohmann::json to_json(const RunConfig& config);

/// Spin names: up-up, up-down, down-up, down-down, singlet, triplet0,
/// parallel-coherent, parallel-mixture, antiparallel-coherent,
/// antiparallel-mixture.
SpinInput parse_spin(const std::string& name);
/// The antiparallel partner of a parallel name and vice versa (up-up <->
/// up-down, down-down <-> down-up, parallel-* <-> antiparallel-*).
std::string antiparallel_partner(const std::string& name);

}  // namespace qsg
