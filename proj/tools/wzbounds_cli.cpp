// wzbounds: experiment runner for distortion bounds on scalar source codes
// with decoder side information.
//
//   wzbounds <experiment> --config <path.json> --out <dir> [--seed N] [--threads N]
//
// Experiments: fig2, fig3, large_gaussian, large_circular, custom.
// Exit codes: 0 success, 2 config error, 3 search budget exceeded,
// 4 solver non-convergence.

#include <iostream>

#include <CLI11.hpp>

#include "wzbounds/wzbounds.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitBudget = 3;
constexpr int kExitSolver = 4;

int run(const std::string& experiment, const std::string& config_path, const std::string& out_dir,
        long long seed, int threads) {
  nlohmann::json j = nlohmann::json::object();
  if (!config_path.empty()) {
    try {
      j = wzb::load_json(config_path);
    } catch (const std::exception& e) {
      std::cerr << "config error: " << e.what() << "\n";
      return kExitConfig;
    }
  }
  wzb::ExperimentConfig cfg;
  try {
    cfg = wzb::parse_config(j, experiment);
    if (seed >= 0) cfg.seed = static_cast<std::uint64_t>(seed);
    if (threads > 0) cfg.threads = threads;
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  }
  try {
    wzb::run_experiment(cfg, out_dir);
  } catch (const wzb::BudgetError& e) {
    std::cerr << "budget error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const wzb::ConvergenceError& e) {
    std::cerr << "solver error: " << e.what() << " (residual " << e.residual() << ")\n";
    return kExitSolver;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::domain_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  }
  std::cout << "wrote " << out_dir << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distortion bounds for scalar source coding with side information"};
  app.require_subcommand(1);

  std::string config_path, out_dir;
  long long seed = -1;
  int threads = 0;

  std::vector<std::string> names = {"fig2", "fig3", "large_gaussian", "large_circular", "custom"};
  std::vector<CLI::App*> subs;
  for (const auto& name : names) {
    CLI::App* sub = app.add_subcommand(name, "run the " + name + " experiment");
    sub->add_option("--config", config_path, "JSON config file");
    sub->add_option("--out", out_dir, "output directory")->required();
    sub->add_option("--seed", seed, "base RNG seed (overrides config)");
    sub->add_option("--threads", threads, "worker threads (overrides config)");
    subs.push_back(sub);
  }

  CLI11_PARSE(app, argc, argv);

  for (std::size_t i = 0; i < names.size(); ++i)
    if (subs[i]->parsed()) return run(names[i], config_path, out_dir, seed, threads);
  return kExitConfig;
}
