#include "qsg/config.hpp"

#include <fstream>
#include <set>

#include "qsg/error.hpp"

namespace qsg {

using nlohmann::json;

namespace {

// Reads fields out of one JSON object and remembers which keys were used so
// that leftovers can be reported.
class ObjectReader {
 public:
  ObjectReader(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) throw ValidationError(path_ + ": expected an object");
  }

  bool has(const std::string& key) {
    seen_.insert(key);
    return j_.contains(key);
  }

  void number(const std::string& key, double& out) {
    if (!has(key)) return;
    const json& v = j_.at(key);
    if (!v.is_number()) throw ValidationError(where(key) + ": expected a number");
    out = v.get<double>();
  }

  void integer(const std::string& key, int& out) {
    if (!has(key)) return;
    const json& v = j_.at(key);
    if (!v.is_number_integer()) throw ValidationError(where(key) + ": expected an integer");
    out = v.get<int>();
  }

  void boolean(const std::string& key, bool& out) {
    if (!has(key)) return;
    const json& v = j_.at(key);
    if (!v.is_boolean()) throw ValidationError(where(key) + ": expected true or false");
    out = v.get<bool>();
  }

  void string(const std::string& key, std::string& out) {
    if (!has(key)) return;
    const json& v = j_.at(key);
    if (!v.is_string()) throw ValidationError(where(key) + ": expected a string");
    out = v.get<std::string>();
  }

  void numbers(const std::string& key, std::vector<double>& out) {
    if (!has(key)) return;
    const json& v = j_.at(key);
    if (!v.is_array()) throw ValidationError(where(key) + ": expected an array of numbers");
    out.clear();
    for (const json& x : v) {
      if (!x.is_number()) throw ValidationError(where(key) + ": expected an array of numbers");
      out.push_back(x.get<double>());
    }
  }

  void position(const std::string& key, Position3& out) {
    std::vector<double> v;
    numbers(key, v);
    if (!has(key)) return;
    if (v.size() != 3) throw ValidationError(where(key) + ": expected [x, y, z]");
    out = {v[0], v[1], v[2]};
  }

  const json* object(const std::string& key) {
    if (!has(key)) return nullptr;
    return &j_.at(key);
  }

  std::string where(const std::string& key) const { return path_ + "." + key; }

  void finish() const {
    for (const auto& item : j_.items()) {
      if (!seen_.count(item.key())) throw ValidationError("unknown key: " + where(item.key()));
    }
  }

 private:
  const json& j_;
  std::string path_;
  std::set<std::string> seen_;
};

std::vector<double> default_p_grid() {
  std::vector<double> g;
  for (int i = 1; i <= 99; ++i) g.push_back(i / 100.0);
  return g;
}

PacketProfile parse_profile(const std::string& s) {
  if (s == "square") return PacketProfile::square;
  if (s == "gaussian") return PacketProfile::gaussian;
  throw ValidationError("unknown packet profile: " + s);
}

const char* to_string(PacketProfile p) { return p == PacketProfile::square ? "square" : "gaussian"; }

LoopRepresentation parse_loops(const std::string& s) {
  if (s == "coherent") return LoopRepresentation::coherent;
  if (s == "mixture") return LoopRepresentation::mixture;
  throw ValidationError("unknown loop representation: " + s);
}

void validate(const RunConfig& c) {
  if (!(c.tau > 0.0)) throw ValidationError("tau must be positive");
  if (!(c.params.mass > 0.0) || !(c.params.mu0 > 0.0) || !(c.params.hbar > 0.0)) {
    throw ValidationError("mass, mu0 and hbar must be positive");
  }
  if (!(c.loop_radius > 0.0) || c.loop_current < 0.0) {
    throw ValidationError("loop radius must be positive and current non-negative");
  }
  if (!(c.beam.speed > 0.0)) throw ValidationError("beam speed must be positive");
  for (double v : c.beam.speed_sweep) {
    if (!(v > 0.0)) throw ValidationError("speed sweep values must be positive");
  }
  if (!(c.beam.temperature > 0.0)) throw ValidationError("temperature must be positive");
  if (!(c.beam.packet_width > 0.0)) throw ValidationError("packet width must be positive");
  c.figure2.sweep.validate();
  parse_spin(c.figure2.spin);
  if (c.figure2.antiparallel) antiparallel_partner(c.figure2.spin);

  const OracleConfig& o = c.oracle;
  if (o.points_per_axis < 8) throw ValidationError("oracle grid needs at least 8 points");
  if (!(o.box_half_width > 0.0) || !(o.dt > 0.0) || !(o.packet_sigma > 0.0)) {
    throw ValidationError("oracle box, dt and packet sigma must be positive");
  }
  if (o.accel_steps < 4) throw ValidationError("oracle accel_steps must be at least 4");
  if (o.windows.size() < 2) throw ValidationError("oracle needs at least two windows");
  for (std::size_t i = 0; i < o.windows.size(); ++i) {
    if (!(o.windows[i] > 0.0) || (i > 0 && !(o.windows[i] > o.windows[i - 1]))) {
      throw ValidationError("oracle windows must be positive and increasing");
    }
  }
  if (!(o.coupling_scale > 1.0)) throw ValidationError("oracle coupling_scale must exceed 1");
  if (!std::holds_alternative<SpinState>(parse_spin(o.spin))) {
    throw ValidationError("oracle spin must be a pure state");
  }

  c.epr.scenario.validate();
  if (c.epr.p_grid.empty()) throw ValidationError("epr p_grid must not be empty");
  for (double p : c.epr.p_grid) {
    if (!(p > 0.0 && p <= 1.0)) throw ValidationError("epr p_grid values must lie in (0, 1]");
  }
  if (c.out_dir.empty()) throw ValidationError("output directory must not be empty");
}

}  // namespace

RunConfig preset_config(const std::string& name) {
  if (name != "paper-sec4") throw ValidationError("unknown preset: " + name);
  RunConfig c;
  c.preset = name;
  c.params = preset_params();
  c.epr.p_grid = default_p_grid();
  return c;
}

RunConfig parse_config(const json& doc) {
  ObjectReader root(doc, "config");
  std::string preset = "paper-sec4";
  root.string("preset", preset);
  RunConfig c = preset_config(preset);

  if (const json* j = root.object("physics")) {
    ObjectReader r(*j, "physics");
    bool explicit_beta = false;
    r.number("alpha", c.params.alpha);
    if (r.has("beta")) {
      r.number("beta", c.params.beta);
      explicit_beta = true;
    }
    r.number("mass", c.params.mass);
    r.number("B0", c.params.B0);
    r.number("mu0", c.params.mu0);
    r.number("hbar", c.params.hbar);
    r.number("loop_current", c.loop_current);
    r.number("loop_radius", c.loop_radius);
    r.finish();
    if (!explicit_beta) {
      // Loop-derived beta takes the sign of alpha so that the pair attracts
      // when parallel, as in the preset.
      c.params.beta = c.loop_current > 0.0
                          ? std::copysign(beta_from_loop(c.loop_current, c.loop_radius,
                                                         c.params.hbar),
                                          c.params.alpha)
                          : 0.0;
    }
  }
  root.number("tau", c.tau);

  if (const json* j = root.object("beam")) {
    ObjectReader r(*j, "beam");
    r.number("speed", c.beam.speed);
    r.numbers("speed_sweep", c.beam.speed_sweep);
    r.number("temperature", c.beam.temperature);
    r.number("packet_width_m", c.beam.packet_width);
    r.finish();
  }

  if (const json* j = root.object("figure2")) {
    ObjectReader r(*j, "figure2");
    ProfileSweep& s = c.figure2.sweep;
    r.number("x", s.x);
    r.number("z", s.z);
    r.number("y_min", s.y_min);
    r.number("y_max", s.y_max);
    r.integer("samples", s.samples);
    r.number("width", s.width);
    std::string profile = to_string(s.profile);
    r.string("profile", profile);
    s.profile = parse_profile(profile);
    r.string("spin", c.figure2.spin);
    r.boolean("antiparallel", c.figure2.antiparallel);
    r.finish();
  }

  if (const json* j = root.object("oracle")) {
    ObjectReader r(*j, "oracle");
    OracleConfig& o = c.oracle;
    r.integer("points_per_axis", o.points_per_axis);
    r.number("box_half_width", o.box_half_width);
    r.number("dt", o.dt);
    r.number("packet_sigma", o.packet_sigma);
    r.position("center", o.center);
    r.string("spin", o.spin);
    r.integer("accel_steps", o.accel_steps);
    r.number("kick_velocity", o.kick_velocity);
    r.numbers("windows", o.windows);
    r.boolean("zeeman_check", o.zeeman_check);
    r.number("coupling_scale", o.coupling_scale);
    r.finish();
  }

  if (const json* j = root.object("epr")) {
    ObjectReader r(*j, "epr");
    EPRScenario& s = c.epr.scenario;
    std::string bell = to_string(s.bell);
    r.string("bell", bell);
    s.bell = parse_bell_state(bell);
    r.number("p1_up", s.p1_up);
    r.number("p2_up", s.p2_up);
    std::string loops = s.loops == LoopRepresentation::coherent ? "coherent" : "mixture";
    r.string("loops", loops);
    s.loops = parse_loops(loops);
    r.numbers("p_grid", c.epr.p_grid);
    r.finish();
  }

  if (const json* j = root.object("output")) {
    ObjectReader r(*j, "output");
    r.string("dir", c.out_dir);
    r.finish();
  }
  root.finish();
  validate(c);
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open config file: " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError("config is not valid JSON: " + std::string(e.what()));
  }
  return parse_config(doc);
}

json to_json(const RunConfig& c) {
  const ProfileSweep& s = c.figure2.sweep;
  const OracleConfig& o = c.oracle;
  return {
      {"preset", c.preset},
      {"physics",
       {{"alpha", c.params.alpha},
        {"beta", c.params.beta},
        {"mass", c.params.mass},
        {"B0", c.params.B0},
        {"mu0", c.params.mu0},
        {"hbar", c.params.hbar},
        {"loop_current", c.loop_current},
        {"loop_radius", c.loop_radius}}},
      {"tau", c.tau},
      {"beam",
       {{"speed", c.beam.speed},
        {"speed_sweep", c.beam.speed_sweep},
        {"temperature", c.beam.temperature},
        {"packet_width_m", c.beam.packet_width}}},
      {"figure2",
       {{"x", s.x},
        {"z", s.z},
        {"y_min", s.y_min},
        {"y_max", s.y_max},
        {"samples", s.samples},
        {"width", s.width},
        {"profile", to_string(s.profile)},
        {"spin", c.figure2.spin},
        {"antiparallel", c.figure2.antiparallel}}},
      {"oracle",
       {{"points_per_axis", o.points_per_axis},
        {"box_half_width", o.box_half_width},
        {"dt", o.dt},
        {"packet_sigma", o.packet_sigma},
        {"center", {o.center.x, o.center.y, o.center.z}},
        {"spin", o.spin},
        {"accel_steps", o.accel_steps},
        {"kick_velocity", o.kick_velocity},
        {"windows", o.windows},
        {"zeeman_check", o.zeeman_check},
        {"coupling_scale", o.coupling_scale}}},
      {"epr",
       {{"bell", to_string(c.epr.scenario.bell)},
        {"p1_up", c.epr.scenario.p1_up},
        {"p2_up", c.epr.scenario.p2_up},
        {"loops",
         c.epr.scenario.loops == LoopRepresentation::coherent ? "coherent" : "mixture"},
        {"p_grid", c.epr.p_grid}}},
      {"output", {{"dir", c.out_dir}}},
  };
}

SpinInput parse_spin(const std::string& name) {
  if (name == "up-up") return basis_state(Spin::up, Spin::up);
  if (name == "up-down") return basis_state(Spin::up, Spin::down);
  if (name == "down-up") return basis_state(Spin::down, Spin::up);
  if (name == "down-down") return basis_state(Spin::down, Spin::down);
  if (name == "singlet") return singlet();
  if (name == "triplet0") return triplet_zero();
  if (name == "parallel-coherent") return parallel_coherent();
  if (name == "parallel-mixture") return parallel_mixture();
  if (name == "antiparallel-coherent") return antiparallel_coherent();
  if (name == "antiparallel-mixture") return antiparallel_mixture();
  throw ValidationError("unknown spin state: " + name);
}

std::string antiparallel_partner(const std::string& name) {
  static const std::pair<const char*, const char*> pairs[] = {
      {"up-up", "up-down"},
      {"down-down", "down-up"},
      {"parallel-coherent", "antiparallel-coherent"},
      {"parallel-mixture", "antiparallel-mixture"},
  };
  for (const auto& [a, b] : pairs) {
    if (name == a) return b;
    if (name == b) return a;
  }
  throw ValidationError("spin state has no antiparallel partner: " + name);
}

}  // namespace qsg
