#pragma once

// Subcommand bodies shared by the CLI and the tests. Each cmd_* writes its
// data files into config.out_dir and returns the JSON summary it wrote.
// Floating values in JSON are rounded to 12 significant digits.

#include <string>
#include <vector>

#include <json.hpp>

#include "qsg/config.hpp"
#include "qsg/grid_oracle.hpp"
#include "qsg/profile.hpp"

namespace qsg {

inline constexpr double kReferenceAverageAcceleration = -2.22;  // l / tau^2

struct Figure2Result {
  AccelerationProfile profile;
  nlohmann::json summary;
};
Figure2Result run_figure2(const RunConfig& config);

/// Distance between the two zero crossings that bound the central lobe.
/// Throws NumericalError unless exactly one crossing lies on each side of
/// y = 0.
double central_lobe_width(const AccelerationProfile& profile);

nlohmann::json run_deflect(const RunConfig& config);

struct EPRResult {
  std::vector<SweepRow> sweep;
  nlohmann::json summary;
};
EPRResult run_epr(const RunConfig& config);

struct OracleResult {
  TimeSeries rest_series;  // zero initial momentum
  TimeSeries kick_series;  // initial momentum along z
  nlohmann::json report;
};
OracleResult run_oracle(const RunConfig& config);

struct SelftestCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};
std::vector<SelftestCheck> run_selftest(const RunConfig& config);

nlohmann::json cmd_figure2(const RunConfig& config);
nlohmann::json cmd_deflect(const RunConfig& config);
nlohmann::json cmd_epr(const RunConfig& config);
nlohmann::json cmd_oracle(const RunConfig& config);
nlohmann::json cmd_selftest(const RunConfig& config);

/// Rounds every floating value to 12 significant digits, recursively.
nlohmann::json rounded(nlohmann::json j);

}  // namespace qsg
