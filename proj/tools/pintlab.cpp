#include "pintlab/experiments.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

// 0 success, 1 config error, 2 numerical failure, 3 I/O error
constexpr int kExitConfig = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitIo = 3;

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::system_error(errno, std::generic_category(), "cannot read " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int run_command(const std::string& config_path, const pintlab::RunnerOptions& options) {
  const std::string text = read_file(config_path);
  const std::vector<pintlab::ExperimentConfig> configs = pintlab::parse_config_file(text);
  for (const pintlab::ExperimentConfig& cfg : configs) {
    const pintlab::ExperimentResult result = pintlab::run_experiment(cfg, options);
    long failed = 0;
    for (const pintlab::ResultRow& row : result.rows) {
      if (!row.cells.empty() && row.cells.back().first == "error" &&
          !row.cells.back().second.empty()) {
        ++failed;
      }
    }
    std::cout << pintlab::experiment_name(cfg.id) << ": " << result.rows.size() << " rows";
    if (failed > 0) {
      std::cout << " (" << failed << " with per-row errors)";
    }
    for (const auto& file : result.files) {
      std::cout << "\n  wrote " << file.string();
    }
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parareal laboratory for linear initial value problems with spatial coarsening"};
  app.require_subcommand(1);

  std::string config_path;
  pintlab::RunnerOptions options;
  bool no_plots = false;

  CLI::App* run = app.add_subcommand("run", "run every experiment section of a config file");
  run->add_option("config", config_path, "config file (key = value lines, [Experiment] sections)")
      ->required();
  run->add_option("--out-dir", options.out_dir, "output directory (default: out)");
  run->add_option("--jobs", options.jobs, "worker threads for sweeps (0 = hardware)");
  run->add_option("--seed", options.seed, "seed for generated test data (data rows never use it)");
  run->add_flag("--no-plots", no_plots, "skip gnuplot script emission");

  CLI::App* list = app.add_subcommand("list-experiments", "list experiment ids");

  std::string defaults_name;
  CLI::App* defaults = app.add_subcommand("defaults", "print the default config of an experiment");
  defaults->add_option("experiment", defaults_name, "experiment id")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitConfig;
  }

  try {
    if (run->parsed()) {
      options.write_plots = !no_plots;
      return run_command(config_path, options);
    }
    if (list->parsed()) {
      for (pintlab::ExperimentId id : pintlab::all_experiments()) {
        std::cout << pintlab::experiment_name(id) << "  -  "
                  << pintlab::experiment_summary(id) << "\n";
      }
      return 0;
    }
    if (defaults->parsed()) {
      const auto id = pintlab::experiment_from_name(defaults_name);
      if (!id) {
        std::cerr << "unknown experiment '" << defaults_name << "'\n";
        return kExitConfig;
      }
      std::cout << pintlab::format_config(pintlab::default_config(*id));
      return 0;
    }
  } catch (const pintlab::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const pintlab::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::system_error& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
  return 0;
}
