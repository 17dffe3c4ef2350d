#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("qsg_cli_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

int run(const std::string& args) {
  const std::string cmd = std::string(QSG_CLI) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path write_config(const fs::path& dir, const std::string& body) {
  const fs::path p = dir / "config.json";
  std::ofstream(p) << body;
  return p;
}

std::vector<double> column(const fs::path& csv, int index) {
  std::ifstream in(csv);
  std::string line;
  std::getline(in, line);
  std::vector<double> out;
  while (std::getline(in, line)) {
    std::stringstream row(line);
    std::string cell;
    for (int i = 0; i <= index; ++i) std::getline(row, cell, ',');
    out.push_back(std::stod(cell));
  }
  return out;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("exit codes") {
  const fs::path dir = scratch("exit");
  CHECK(run("") == 1);
  CHECK(run("bogus") == 1);
  CHECK(run("--config /nonexistent.json figure2") == 1);
  CHECK(run("--preset lab deflect --out " + dir.string()) == 1);
  const fs::path bad = write_config(dir, R"({"beam": {"speeed": 1}})");
  CHECK(run("--config " + bad.string() + " deflect") == 1);
  // packet centred on the loop axis at a height below its own size
  const fs::path singular = write_config(
      dir, R"({"figure2": {"z": 0.0004, "samples": 3}, "output": {"dir": ")" + dir.string() +
               R"("}})");
  CHECK(run("--config " + singular.string() + " figure2") == 2);
  CHECK(run("--out " + dir.string() + " epr") == 0);
}

TEST_CASE("repeat runs are byte-identical") {
  for (const char* cmd : {"figure2", "deflect", "epr"}) {
    const fs::path a = scratch(std::string(cmd) + "_a"), b = scratch(std::string(cmd) + "_b");
    REQUIRE(run(std::string("--out ") + a.string() + " " + cmd) == 0);
    REQUIRE(run(std::string("--out ") + b.string() + " " + cmd) == 0);
    int files = 0;
    for (const auto& entry : fs::directory_iterator(a)) {
      ++files;
      CHECK(slurp(entry.path()) == slurp(b / entry.path().filename()));
    }
    CHECK(files >= 1);
  }
}

TEST_CASE("figure2 outputs") {
  const fs::path dir = scratch("figure2");
  REQUIRE(run("--out " + dir.string() + " figure2") == 0);
  const auto j = nlohmann::json::parse(slurp(dir / "figure2.json"));
  CHECK(j["a_z_at_y0"].get<double>() == doctest::Approx(-4.66).epsilon(0.01));
  CHECK(j["crossings"].size() == 2);
  CHECK(j["average"].get<double>() < 0.0);
  CHECK(column(dir / "figure2.csv", 0).size() == 201);
}

TEST_CASE("antiparallel profile mirrors the parallel one") {
  const fs::path par = scratch("par"), anti = scratch("anti");
  REQUIRE(run("--out " + par.string() + " figure2") == 0);
  const fs::path cfg = write_config(anti, R"({"figure2": {"antiparallel": true}})");
  REQUIRE(run("--config " + cfg.string() + " --out " + anti.string() + " figure2") == 0);
  const auto a = column(par / "figure2.csv", 1), b = column(anti / "figure2.csv", 1);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(b[i] == -a[i]);
  const auto j = nlohmann::json::parse(slurp(anti / "figure2.json"));
  CHECK(j["spin"] == "up-down");
  CHECK(j["average"].get<double>() > 0.0);
}

TEST_CASE("config subcommand echoes the effective configuration") {
  const fs::path dir = scratch("config");
  const std::string cmd = std::string(QSG_CLI) + " config > " + (dir / "out.json").string();
  REQUIRE(std::system(cmd.c_str()) == 0);
  const auto j = nlohmann::json::parse(slurp(dir / "out.json"));
  CHECK(j["preset"] == "paper-sec4");
  CHECK(j["beam"]["speed"] == 1000.0);
}

}  // TEST_SUITE
