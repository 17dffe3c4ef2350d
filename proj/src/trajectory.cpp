#include "qsg/trajectory.hpp"

#include <cmath>

#include "qsg/error.hpp"

namespace qsg {

DeflectionEstimate estimate(const PhysicalParams& params, double tau, double speed,
                            double avg_acceleration_natural, double region_width_natural) {
  if (!(speed > 0.0)) throw ValidationError("speed must be positive");
  if (!(region_width_natural > 0.0)) throw ValidationError("region width must be positive");
  const NaturalUnits units = derive_length_unit(params, tau);

  DeflectionEstimate e;
  e.length_unit = units.length;
  e.tau = tau;
  e.speed = speed;
  e.region_width_natural = region_width_natural;
  e.region_width = from_natural(region_width_natural, Dimension::length, units);
  e.avg_acceleration_natural = avg_acceleration_natural;
  e.avg_acceleration = from_natural(avg_acceleration_natural, Dimension::acceleration, units);
  e.interaction_time = e.region_width / speed;
  e.deflection = 0.5 * std::abs(e.avg_acceleration) * e.interaction_time * e.interaction_time;
  e.direction = (e.avg_acceleration > 0.0) - (e.avg_acceleration < 0.0);
  return e;
}

double separation_vs_packet(double deflection, double packet_width) {
  if (!(packet_width > 0.0)) throw ValidationError("packet width must be positive");
  return 2.0 * std::abs(deflection) / packet_width;
}

nlohmann::json to_json(const DeflectionEstimate& e) {
  return {
      {"length_unit_m", e.length_unit},
      {"tau_s", e.tau},
      {"speed_m_per_s", e.speed},
      {"region_width_natural", e.region_width_natural},
      {"region_width_m", e.region_width},
      {"avg_acceleration_natural", e.avg_acceleration_natural},
      {"avg_acceleration_m_per_s2", e.avg_acceleration},
      {"interaction_time_s", e.interaction_time},
      {"deflection_m", e.deflection},
      {"direction", e.direction},
  };
}

}  // namespace qsg
