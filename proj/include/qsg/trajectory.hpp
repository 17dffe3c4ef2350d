#pragma once

// Constant-acceleration deflection estimate: the particle crosses the
// negative-acceleration region at fixed speed and is displaced by
// a t^2 / 2 while inside it.

#include <json.hpp>

#include "qsg/units.hpp"

namespace qsg {

struct DeflectionEstimate {
  double length_unit = 0.0;       // l, m
  double tau = 0.0;               // s
  double speed = 0.0;             // m/s
  double region_width_natural = 0.0;
  double region_width = 0.0;      // m
  double avg_acceleration_natural = 0.0;
  double avg_acceleration = 0.0;  // m/s^2, signed
  double interaction_time = 0.0;  // s
  double deflection = 0.0;        // m, magnitude
  int direction = 0;              // sign of the acceleration along z
};

/// Throws ValidationError unless tau, speed and region width are positive.
DeflectionEstimate estimate(const PhysicalParams& params, double tau, double speed,
                            double avg_acceleration_natural, double region_width_natural);

/// 2 |deflection| / packet width: separation of the parallel and
/// antiparallel spots in units of the packet size.
double separation_vs_packet(double deflection, double packet_width);

nlohmann::json to_json(const DeflectionEstimate& e);

}  // namespace qsg
