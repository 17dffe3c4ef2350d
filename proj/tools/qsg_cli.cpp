// qsg: command-line front end. Exit codes: 0 success, 1 validation error,
// 2 numerical failure.

#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "qsg/commands.hpp"
#include "qsg/config.hpp"
#include "qsg/error.hpp"

namespace {

struct Options {
  std::string config_path;
  std::string preset;
  std::string out_dir;
  std::optional<long long> seed;  // reserved; every default is deterministic
};

qsg::RunConfig resolve(const Options& o) {
  qsg::RunConfig c;
  if (!o.config_path.empty()) {
    c = qsg::load_config(o.config_path);
    if (!o.preset.empty() && o.preset != c.preset) {
      throw qsg::ValidationError("--preset " + o.preset + " conflicts with config preset " +
                                 c.preset);
    }
  } else {
    c = qsg::preset_config(o.preset.empty() ? "paper-sec4" : o.preset);
  }
  if (!o.out_dir.empty()) c.out_dir = o.out_dir;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spin-loop Stern-Gerlach simulator"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--config", opt.config_path, "JSON run configuration")->check(CLI::ExistingFile);
  app.add_option("--preset", opt.preset, "named parameter preset (paper-sec4)");
  app.add_option("--out", opt.out_dir, "output directory (overrides the config)");
  app.add_option("--seed", opt.seed, "reserved; all computations are deterministic");

  auto* figure2 = app.add_subcommand("figure2", "acceleration profile and lobe average");
  auto* deflect = app.add_subcommand("deflect", "screen deflection estimate");
  auto* epr = app.add_subcommand("epr", "two-wing correlation probabilities");
  auto* oracle = app.add_subcommand("oracle", "grid Schrodinger check of the force");
  auto* selftest = app.add_subcommand("selftest", "invariant suite");
  auto* print_config = app.add_subcommand("config", "print the effective configuration");
  for (auto* sub : {figure2, deflect, epr, oracle, selftest, print_config}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    const qsg::RunConfig config = resolve(opt);
    nlohmann::json result;
    if (figure2->parsed()) result = qsg::cmd_figure2(config);
    if (deflect->parsed()) result = qsg::cmd_deflect(config);
    if (epr->parsed()) result = qsg::cmd_epr(config);
    if (oracle->parsed()) result = qsg::cmd_oracle(config);
    if (print_config->parsed()) result = qsg::rounded(qsg::to_json(config));
    if (selftest->parsed()) {
      result = qsg::cmd_selftest(config);
      for (const auto& k : result["checks"]) {
        std::cout << (k["pass"].get<bool>() ? "PASS " : "FAIL ") << k["name"].get<std::string>()
                  << ": " << k["detail"].get<std::string>() << '\n';
      }
      return result["pass"].get<bool>() ? 0 : 2;
    }
    std::cout << result.dump(2) << '\n';
    if (oracle->parsed() && !result["pass"].get<bool>()) return 2;
    return 0;
  } catch (const qsg::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == qsg::ErrorKind::validation ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
