#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "jtcomp/config.hpp"
#include "jtcomp/validate.hpp"

namespace {

using jtcomp::RunConfig;

RunConfig build_config(const std::string& config_path,
                       const std::vector<std::string>& overrides,
                       std::uint64_t seed, bool seed_set) {
  RunConfig cfg;
  if (!config_path.empty()) cfg = jtcomp::load_config(config_path);
  for (const std::string& kv : overrides) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("--set expects key=value, got '" + kv + "'");
    }
    cfg.apply(kv.substr(0, eq), kv.substr(eq + 1));
  }
  if (seed_set) cfg.params.master_seed = seed;
  return cfg;
}

int emit(const RunConfig& cfg, const std::vector<jtcomp::SweepPoint>& points,
         const std::string& out_path) {
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      std::cerr << "error: cannot open output file '" << out_path << "'\n";
      return 1;
    }
    os = &file;
  }
  if (cfg.format == jtcomp::OutputFormat::kCsv) {
    jtcomp::write_csv(*os, cfg, points);
  } else {
    jtcomp::write_text(*os, cfg, points);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monte Carlo simulator for joint-transmission clustering in "
               "small-cell networks with anisotropic path loss"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::vector<std::string> overrides;
  std::string out_path;
  int workers = 1;
  std::uint64_t seed = 0;
  app.add_option("--config", config_path, "Config file (key = value lines)");
  app.add_option("--set", overrides, "Override a config key (key=value)");
  app.add_option("--out", out_path, "Output file (default stdout)");
  app.add_option("--workers", workers, "Worker thread count")
      ->check(CLI::PositiveNumber);
  auto* seed_opt = app.add_option("--seed", seed, "Master seed override");

  auto* run_cmd = app.add_subcommand("run", "Run one experiment");

  auto* sweep_cmd = app.add_subcommand("sweep", "Sweep one parameter axis");
  std::string axis_name;
  std::vector<double> values;
  sweep_cmd->add_option("--axis", axis_name, "Axis: lambda_b, lambda_u, r_min")
      ->required();
  sweep_cmd->add_option("--values", values, "Axis values")->required();

  auto* validate_cmd =
      app.add_subcommand("validate", "Run the self-validation suite");
  std::string inject = "none";
  validate_cmd->add_option(
      "--inject", inject,
      "Fault injection: none, beta-support, distance-gate");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate_cmd->parsed()) {
      jtcomp::FaultInjection fault = jtcomp::FaultInjection::kNone;
      if (inject == "beta-support") {
        fault = jtcomp::FaultInjection::kWidenBetaSupport;
      } else if (inject == "distance-gate") {
        fault = jtcomp::FaultInjection::kDisableDistanceGate;
      } else if (inject != "none") {
        std::cerr << "error: unknown fault '" << inject << "'\n";
        return 1;
      }
      const std::uint64_t vseed = seed_opt->count() > 0 ? seed : 12345;
      const auto checks = jtcomp::run_validation(fault, vseed);
      bool all_pass = true;
      for (const auto& c : checks) {
        std::printf("%-26s %s  %s\n", c.name.c_str(),
                    c.pass ? "PASS" : "FAIL", c.detail.c_str());
        all_pass = all_pass && c.pass;
      }
      std::printf("%d/%zu checks passed\n",
                  static_cast<int>(
                      std::count_if(checks.begin(), checks.end(),
                                    [](const auto& c) { return c.pass; })),
                  checks.size());
      return all_pass ? 0 : 1;
    }

    RunConfig cfg =
        build_config(config_path, overrides, seed, seed_opt->count() > 0);

    std::vector<jtcomp::SweepPoint> points;
    if (run_cmd->parsed()) {
      points.push_back({0.0, jtcomp::run_experiment(cfg.params, workers)});
    } else {
      jtcomp::SweepAxis axis;
      if (axis_name == "lambda_b") {
        axis = jtcomp::SweepAxis::kLambdaSbs;
      } else if (axis_name == "lambda_u") {
        axis = jtcomp::SweepAxis::kLambdaUser;
      } else if (axis_name == "r_min") {
        axis = jtcomp::SweepAxis::kRateMin;
      } else {
        std::cerr << "error: unknown axis '" << axis_name << "'\n";
        return 1;
      }
      cfg.axis = axis;
      cfg.sweep_values = values;
      points = jtcomp::sweep(cfg.params, axis, values, workers);
    }
    return emit(cfg, points, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
