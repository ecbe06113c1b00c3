#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "optfprl/export.hpp"
#include "optfprl/verify.hpp"

using namespace optfprl;

namespace {

// Flat key=value file mirroring the run flags ('#' starts a comment); values
// given on the command line win.
std::map<std::string, std::string> load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read config file: " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto strip = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      const auto b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    const std::string key = strip(line.substr(0, eq));
    const std::string value = strip(line.substr(eq + 1));
    if (!key.empty()) kv[key] = value;
  }
  return kv;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Online convex optimization over compact sets: pruned-leader learner, "
               "baselines, and the non-stationary benchmark suite"};
  app.require_subcommand(1);

  // run ---------------------------------------------------------------
  auto* run = app.add_subcommand("run", "run one experiment and export its trace");

  std::string config_path;
  std::string scenario_id = "1";
  std::string algo_str = "optfprl";
  std::string strategy_str = "agnostic";
  std::string check_str = "on";
  std::string out_path;
  std::string svg_path;
  double path_budget = -1.0;
  int cadence = 1;
  long horizon = 5000;
  int dim = 16;
  double radius = 2.0;
  unsigned long long seed = 0;
  double noise = -1.0;

  run->add_option("--config", config_path, "flat key=value file mirroring the flags; flags win");
  run->add_option("--scenario", scenario_id, "1..6 or random")->capture_default_str();
  run->add_option("--algo", algo_str, "optfprl|ftrl|ogd|opt-ftrl|opt-ogd")
      ->capture_default_str();
  run->add_option("--strategy", strategy_str,
                  "agnostic|known-path|observed-path|recursive (optfprl only)")
      ->capture_default_str();
  run->add_option("--path-budget", path_budget,
                  "comparator path budget for known-path; default: measured");
  run->add_option("--cadence", cadence, "prune at most every k slots")->capture_default_str();
  run->add_option("--horizon", horizon, "number of slots T")->capture_default_str();
  run->add_option("--dim", dim, "dimension d")->capture_default_str();
  run->add_option("--radius", radius, "ball radius R")->capture_default_str();
  run->add_option("--seed", seed, "seed for the random scenario")->capture_default_str();
  run->add_option("--noise", noise,
                  "random scenario predictions: <0 zero, 0 perfect, >0 gaussian scale")
      ->capture_default_str();
  run->add_option("--check-invariants", check_str, "on|off")->capture_default_str();
  run->add_option("--out", out_path, "CSV output path");
  run->add_option("--svg", svg_path, "optional SVG chart of average regret");

  // verify ------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "run the invariant/property suite");
  bool serial = false;
  verify->add_flag("--serial", serial, "disable OpenMP in the suite");

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) {
    try {
      if (!config_path.empty()) {
        const auto kv = load_config(config_path);
        const auto apply = [&](const char* flag, const char* key, auto& target) {
          const auto it = kv.find(key);
          if (it == kv.end() || run->count(flag) > 0) return;
          std::istringstream is(it->second);
          is >> target;
          if (is.fail()) throw std::runtime_error(std::string("bad config value for ") + key);
        };
        const auto apply_str = [&](const char* flag, const char* key, std::string& target) {
          const auto it = kv.find(key);
          if (it == kv.end() || run->count(flag) > 0) return;
          target = it->second;
        };
        apply_str("--scenario", "scenario", scenario_id);
        apply_str("--algo", "algo", algo_str);
        apply_str("--strategy", "strategy", strategy_str);
        apply("--path-budget", "path-budget", path_budget);
        apply("--cadence", "cadence", cadence);
        apply("--horizon", "horizon", horizon);
        apply("--dim", "dim", dim);
        apply("--radius", "radius", radius);
        apply("--seed", "seed", seed);
        apply("--noise", "noise", noise);
        apply_str("--check-invariants", "check-invariants", check_str);
        apply_str("--out", "out", out_path);
        apply_str("--svg", "svg", svg_path);
      }
    } catch (const std::exception& e) {
      std::cerr << e.what() << "\n";
      return 2;
    }
    if (out_path.empty()) {
      std::cerr << "--out is required (flag or config)\n";
      return 2;
    }

    RunConfig cfg;
    if (scenario_id == "random") {
      RandomInstanceConfig icfg;
      icfg.seed = seed;
      icfg.horizon = horizon;
      icfg.dim = dim;
      icfg.radius = radius;
      if (noise < 0.0) {
        icfg.pred_mode = PredictionMode::zero;
      } else if (noise == 0.0) {
        icfg.pred_mode = PredictionMode::perfect;
      } else {
        icfg.pred_mode = PredictionMode::noisy;
        icfg.noise_scale = noise;
      }
      cfg.scenario = make_random_scenario(icfg);
    } else {
      int id = 0;
      try {
        id = std::stoi(scenario_id);
      } catch (...) {
        std::cerr << "bad --scenario: " << scenario_id << "\n";
        return 2;
      }
      cfg.scenario = make_scenario(id, horizon, dim, radius);
    }
    if (!algo_from_name(algo_str, cfg.algo)) {
      std::cerr << "bad --algo: " << algo_str << "\n";
      return 2;
    }
    if (!strategy_from_name(strategy_str, cfg.strategy.kind)) {
      std::cerr << "bad --strategy: " << strategy_str << "\n";
      return 2;
    }
    cfg.strategy.path_budget = path_budget;
    cfg.prune_cadence = cadence;
    cfg.check_invariants = check_str != "off";

    try {
      const RunResult result = run_experiment(cfg);
      export_csv(result.trace, result.report, cfg, out_path);
      if (!svg_path.empty()) {
        const std::string label =
            algo_str + (cfg.algo == Algo::optfprl ? "/" + strategy_str : "");
        render_chart({{label, &result.trace}}, svg_path);
      }
      std::printf("scenario=%s algo=%s T=%ld regret=%.6g avg=%.6g", cfg.scenario.id.c_str(),
                  algo_str.c_str(), cfg.scenario.horizon, result.report.regret_cum,
                  cfg.scenario.horizon > 0
                      ? result.report.regret_cum / static_cast<double>(cfg.scenario.horizon)
                      : 0.0);
      if (result.report.bound_value)
        std::printf(" bound=%.6g satisfied=%s", *result.report.bound_value,
                    result.report.bound_satisfied ? "yes" : "no");
      std::printf("\n");
    } catch (const std::exception& e) {
      std::cerr << "run failed: " << e.what() << "\n";
      return 1;
    }
    return 0;
  }

  // verify
  const std::vector<CheckResult> results = run_acceptance_checks(!serial);
  for (const CheckResult& r : results)
    std::printf("%s  criterion %s  (%s)\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                r.detail.c_str());
  const bool ok = all_pass(results);
  std::printf("%s\n", ok ? "all checks passed" : "CHECKS FAILED");
  return ok ? 0 : 1;
}
