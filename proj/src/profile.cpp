#include "qsg/profile.hpp"

#include <cmath>
#include <cstdio>

#include "qsg/error.hpp"

namespace qsg {

void ProfileSweep::validate() const {
  if (samples < 2) throw ValidationError("profile needs at least two samples");
  if (!(y_max > y_min)) throw ValidationError("profile y range is empty");
  if (!(width > 0.0)) throw ValidationError("wavepacket width must be positive");
}

AccelerationProfile acceleration_profile(const SpinInput& spin, const ProfileSweep& sweep,
                                         double coupling) {
  sweep.validate();
  const std::vector<MomentKey> keys = force_moment_keys();
  AccelerationProfile out{sweep.x, sweep.z, {}};
  out.samples.reserve(sweep.samples);
  const double step = (sweep.y_max - sweep.y_min) / (sweep.samples - 1);
  for (int i = 0; i < sweep.samples; ++i) {
    const double y = sweep.y_min + step * i;
    const WavePacket packet{{sweep.x, y, sweep.z}, sweep.width, sweep.profile};
    out.samples.push_back({y, contract_force(spin, moments(packet, keys), coupling).a_z});
  }
  return out;
}

double region_average(const AccelerationProfile& profile) {
  const auto& s = profile.samples;
  std::size_t best_begin = 0, best_len = 0;
  for (std::size_t i = 0; i < s.size();) {
    if (!(s[i].a_z < 0.0)) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < s.size() && s[j].a_z < 0.0) ++j;
    if (j - i > best_len) {
      best_begin = i;
      best_len = j - i;
    }
    i = j;
  }
  if (best_len == 0) throw ValidationError("region_average: profile has no negative samples");
  if (best_len == 1) return s[best_begin].a_z;

  double area = 0.0;
  for (std::size_t i = best_begin; i + 1 < best_begin + best_len; ++i) {
    area += 0.5 * (s[i].a_z + s[i + 1].a_z) * (s[i + 1].y - s[i].y);
  }
  return area / (s[best_begin + best_len - 1].y - s[best_begin].y);
}

std::vector<double> zero_crossings(const AccelerationProfile& profile) {
  std::vector<double> roots;
  const auto& s = profile.samples;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    const double a0 = s[i].a_z, a1 = s[i + 1].a_z;
    if (a0 == 0.0) {
      roots.push_back(s[i].y);
    } else if ((a0 < 0.0) != (a1 < 0.0) && a1 != 0.0) {
      roots.push_back(s[i].y + (s[i + 1].y - s[i].y) * a0 / (a0 - a1));
    }
  }
  if (!s.empty() && s.back().a_z == 0.0) roots.push_back(s.back().y);
  return roots;
}

void write_profile_csv(std::ostream& out, const AccelerationProfile& profile) {
  out << "y,a_z\n";
  char line[64];
  for (const auto& p : profile.samples) {
    std::snprintf(line, sizeof line, "%.12g,%.12g\n", p.y, p.a_z);
    out << line;
  }
}

}  // namespace qsg
