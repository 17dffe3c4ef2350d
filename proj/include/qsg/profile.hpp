#pragma once

// Acceleration sweep across the loop at fixed height, and the summary
// statistics read off it (negative-lobe average, sign changes).

#include <ostream>
#include <vector>

#include "qsg/deflection.hpp"

namespace qsg {

struct AccelerationSample {
  double y = 0.0;
  double a_z = 0.0;
};

struct AccelerationProfile {
  double x = 0.0;
  double z = 0.0;
  std::vector<AccelerationSample> samples;  // strictly increasing y
};

struct ProfileSweep {
  double x = 0.0;
  double z = 0.4;
  double y_min = -0.5;
  double y_max = 0.5;
  int samples = 201;
  double width = 0.001;
  PacketProfile profile = PacketProfile::square;

  void validate() const;
};

/// Sweeps the packet center along y; each sample is contract_force(...).a_z.
AccelerationProfile acceleration_profile(const SpinInput& spin, const ProfileSweep& sweep,
                                         double coupling = 1.0);

/// Trapezoidal mean of a_z over the longest contiguous run of negative
/// samples. Throws ValidationError if no sample is negative.
double region_average(const AccelerationProfile& profile);

/// Linearly interpolated roots between adjacent samples of opposite sign.
std::vector<double> zero_crossings(const AccelerationProfile& profile);

/// `y,a_z` header, one row per sample, 12 significant digits.
void write_profile_csv(std::ostream& out, const AccelerationProfile& profile);

}  // namespace qsg
