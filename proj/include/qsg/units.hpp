#pragma once

// Dimensional parameters and the natural unit system (l, tau).
//
// The length unit is fixed by l^5 = (mu0 |alpha beta| hbar^2 / m) tau^2, which
// makes the dipole coupling prefactor mu0 alpha beta hbar^2 / m equal to
// sign(alpha beta) in natural units. Energies are then measured in m l^2/tau^2,
// and hbar itself becomes the kinetic scale kappa = hbar tau / (m l^2).

#include <string_view>

namespace qsg {

namespace codata {
// CODATA 2018 recommended values (SI).
inline constexpr double elementary_charge = 1.602176634e-19;  // C, exact
inline constexpr double electron_mass = 9.1093837015e-31;     // kg
inline constexpr double proton_mass = 1.67262192369e-27;      // kg
inline constexpr double atomic_mass_unit = 1.66053906660e-27; // kg
inline constexpr double hydrogen_atom_mass = 1.00782503223 * atomic_mass_unit;  // kg, 1H
inline constexpr double boltzmann = 1.380649e-23;             // J/K, exact
inline constexpr double vacuum_permeability = 1.25663706212e-6;  // T m / A
inline constexpr double hbar = 1.054571817e-34;               // J s
inline constexpr double flux_quantum = 2.067833848e-15;       // Wb, h/(2e)
}  // namespace codata

struct PhysicalParams {
  double alpha = 0.0;  // particle gyromagnetic ratio, A m^2 / (J s)
  double beta = 0.0;   // loop gyromagnetic ratio, A m^2 / (J s)
  double mass = codata::proton_mass;
  double B0 = 0.0;     // uniform external field, T
  double mu0 = codata::vacuum_permeability;
  double hbar = codata::hbar;

  /// Throws ValidationError if mass, mu0, hbar are not positive or if
  /// alpha*beta vanishes.
  void validate() const;

  /// mu0 alpha beta hbar^2 / m expressed in natural units: +1 or -1.
  double coupling_sign() const { return alpha * beta > 0 ? 1.0 : -1.0; }
};

struct NaturalUnits {
  double length = 0.0;  // l, m
  double time = 0.0;    // tau, s
  double mass = 0.0;    // m, kg

  double velocity() const { return length / time; }
  double acceleration() const { return length / (time * time); }
  double energy() const { return mass * length * length / (time * time); }
  double force() const { return mass * acceleration(); }
};

NaturalUnits derive_length_unit(const PhysicalParams& params, double tau);

/// hbar in natural units: hbar tau / (m l^2). Multiplies the Laplacian in the
/// Schrodinger equation once energies are measured in m l^2/tau^2.
double kinetic_scale(const PhysicalParams& params, const NaturalUnits& units);

/// Gyromagnetic ratio of a current loop whose moment I pi R^2 corresponds to
/// spin hbar/2.
double beta_from_loop(double current, double radius, double hbar = codata::hbar);

/// Root-mean-square thermal speed sqrt(3 k_B T / m).
double thermal_speed(double temperature, double mass);

/// Electron-like gyromagnetic ratio -e / (2 m_e).
double electron_gyromagnetic_ratio();

enum class Dimension { length, time, velocity, acceleration, energy, force };

Dimension parse_dimension(std::string_view tag);
double to_natural(double value_si, Dimension dim, const NaturalUnits& units);
double from_natural(double natural_value, Dimension dim, const NaturalUnits& units);

/// Parameter set of the numerical estimate: hydrogen-like particle with
/// alpha = -e/(2 m_e), loop of 1 uA and 1 um radius (beta carries the sign
/// of alpha, |beta/alpha| ~ 7e5), proton mass, and B0 tuned to half a flux
/// quantum through the loop.
PhysicalParams preset_params();

inline constexpr double kPresetLoopCurrent = 1e-6;  // A
inline constexpr double kPresetLoopRadius = 1e-6;   // m
inline constexpr double kPresetTau = 1e-3;          // s
inline constexpr double kPresetOvenTemperature = 373.15;  // K
inline constexpr double kPresetSpeed = 1e3;         // m/s, stated order of magnitude

}  // namespace qsg
