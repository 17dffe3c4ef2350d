#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "qsg/commands.hpp"
#include "qsg/config.hpp"
#include "qsg/error.hpp"

using namespace qsg;
using nlohmann::json;

TEST_SUITE("config") {

TEST_CASE("preset") {
  const RunConfig c = preset_config("paper-sec4");
  CHECK(c.tau == kPresetTau);
  CHECK(c.params.alpha == preset_params().alpha);
  CHECK(c.epr.p_grid.size() == 99);
  CHECK(c.epr.p_grid.front() == doctest::Approx(0.01));
  CHECK(c.epr.p_grid.back() == doctest::Approx(0.99));
  CHECK(c.figure2.sweep.z == 0.4);
  CHECK_THROWS_WITH_AS(preset_config("lab"), "unknown preset: lab", ValidationError);
}

TEST_CASE("empty document is the preset") {
  CHECK(to_json(parse_config(json::object())) == to_json(preset_config("paper-sec4")));
}

TEST_CASE("overrides") {
  const RunConfig c = parse_config(json::parse(R"({
    "tau": 2e-3,
    "beam": {"speed": 500},
    "figure2": {"samples": 51, "profile": "gaussian", "antiparallel": true},
    "oracle": {"center": [0, 0.01, 0.45], "windows": [1e-5, 2e-5]},
    "epr": {"bell": "triplet+", "loops": "mixture", "p_grid": [0.2, 0.4]},
    "output": {"dir": "elsewhere"}
  })"));
  CHECK(c.tau == 2e-3);
  CHECK(c.beam.speed == 500);
  CHECK(c.figure2.sweep.samples == 51);
  CHECK(c.figure2.sweep.profile == PacketProfile::gaussian);
  CHECK(c.figure2.antiparallel);
  CHECK(c.oracle.center.y == 0.01);
  CHECK(c.epr.scenario.bell == BellState::triplet_plus);
  CHECK(c.epr.scenario.loops == LoopRepresentation::mixture);
  CHECK(c.epr.p_grid.size() == 2);
  CHECK(c.out_dir == "elsewhere");
}

TEST_CASE("beta follows the loop unless given") {
  const RunConfig c = parse_config(json::parse(R"({"physics": {"loop_current": 2e-6}})"));
  CHECK(c.params.beta == doctest::Approx(2 * preset_params().beta));
  const RunConfig d = parse_config(json::parse(R"({"physics": {"beta": 3.0}})"));
  CHECK(d.params.beta == 3.0);
}

TEST_CASE("rejections") {
  CHECK_THROWS_WITH_AS(parse_config(json::parse(R"({"beam": {"speeed": 3}})")),
                       "unknown key: beam.speeed", ValidationError);
  CHECK_THROWS_AS(parse_config(json::parse(R"({"colour": 1})")), ValidationError);
  CHECK_THROWS_AS(parse_config(json::parse(R"({"tau": "fast"})")), ValidationError);
  CHECK_THROWS_AS(parse_config(json::parse(R"({"figure2": {"samples": 2.5}})")), ValidationError);
  CHECK_THROWS_AS(parse_config(json::parse(R"({"oracle": {"center": [0, 1]}})")), ValidationError);
  CHECK_THROWS_AS(parse_config(json::parse(R"({"tau": -1})")), ValidationError);
  CHECK_THROWS_AS(parse_config(json::parse(R"({"epr": {"p_grid": [0.5, 1.5]}})")),
                  ValidationError);
  CHECK_THROWS_AS(parse_config(json::parse(R"({"epr": {"bell": "ghz"}})")), ValidationError);
  CHECK_THROWS_AS(parse_config(json::parse(R"({"preset": "other"})")), ValidationError);
  CHECK_THROWS_AS(parse_config(json::parse("[1, 2]")), ValidationError);
  CHECK_THROWS_AS(load_config("/nonexistent/qsg.json"), ValidationError);
}

TEST_CASE("round trip through a file") {
  RunConfig c = preset_config("paper-sec4");
  c.beam.speed = 1234.5;
  c.oracle.spin = "down-down";
  const auto path = std::filesystem::temp_directory_path() / "qsg_config_roundtrip.json";
  {
    std::ofstream out(path);
    out << to_json(c).dump(2);
  }
  const RunConfig back = load_config(path.string());
  CHECK(to_json(back) == to_json(c));
  std::filesystem::remove(path);

  const auto bad = std::filesystem::temp_directory_path() / "qsg_config_bad.json";
  {
    std::ofstream out(bad);
    out << "{ not json";
  }
  CHECK_THROWS_AS(load_config(bad.string()), ValidationError);
  std::filesystem::remove(bad);
}

TEST_CASE("shipped preset file") {
  const RunConfig c = load_config(std::string(QSG_SOURCE_DIR) + "/config/paper-sec4.json");
  // the file carries 12 significant digits
  CHECK(rounded(to_json(c)) == rounded(to_json(preset_config("paper-sec4"))));
}

TEST_CASE("spin names") {
  for (const char* n : {"up-up", "up-down", "down-up", "down-down", "singlet", "triplet0",
                        "parallel-coherent", "parallel-mixture", "antiparallel-coherent",
                        "antiparallel-mixture"}) {
    CHECK_NOTHROW(parse_spin(n));
  }
  CHECK_THROWS_AS(parse_spin("sideways"), ValidationError);
  CHECK(antiparallel_partner("up-up") == "up-down");
  CHECK(antiparallel_partner("down-up") == "down-down");
  CHECK(antiparallel_partner("antiparallel-mixture") == "parallel-mixture");
  CHECK_THROWS_AS(antiparallel_partner("singlet"), ValidationError);
}

}  // TEST_SUITE
