#pragma once

#include "pintlab/toy.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pintlab {

enum class ExperimentId {
  NormSweep,
  PowerVsError,
  SineDivergence,
  HeatNormSweep,
  HeatRun,
  ToyDemo,
  NonNormalAdvection,
  NonNormalAdvectionDiffusion,
};

const char* experiment_name(ExperimentId id);
const char* experiment_summary(ExperimentId id);
std::optional<ExperimentId> experiment_from_name(const std::string& name);
std::vector<ExperimentId> all_experiments();

/// Config file problem; what() carries the line number.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One experiment section. List-valued fields sweep; scalar fields apply to
/// every point. Defaults follow the reference configuration of each figure.
struct ExperimentConfig {
  ExperimentId id = ExperimentId::NormSweep;
  int n = 64;
  double domain_length = 2.0;
  double velocity = 1.0;
  double diffusivity = 1.0;           // nu for heat and toy problems
  std::vector<std::string> schemes;   // "upwind" | "centered"
  std::vector<std::string> methods;   // "implicit_euler" | "trapezoidal" | "exact"
  std::string pairing = "cross";      // scheme x method: "cross" | "zip"
  std::vector<int> fine_steps;        // N_f per slice
  int coarse_steps = 0;               // N_g; 0 mirrors N_f
  std::vector<int> coarse_points;     // m
  int slices = 10;                    // P
  double total_time = 1.0;
  std::vector<std::string> restrictions;  // "auto" | "injection" | "linear"
  std::string ic = "gaussian";            // "gaussian" | "sinesum"
  double ic_center = 1.0;
  double ic_width = 0.25;
  std::vector<double> ic_modes;       // sine-sum wavenumbers (units of pi)
  std::vector<double> ic_amplitudes;
  std::vector<double> epsilons;       // two-mode problem
  int high_mode = 24;                 // two-mode problem L
  std::vector<double> diffusion;      // D sweep
  int max_iterations = 0;             // 0 = one per slice
  double stop_tol = 1e-6;
  std::string stop_on = "none";       // "none" | "increment" | "error"
};

ExperimentConfig default_config(ExperimentId id);

/// Parses a config holding at most one section. Empty text gives the
/// defaults of NormSweep.
ExperimentConfig parse_config(const std::string& text);

/// Parses a whole file: one config per section, in file order.
std::vector<ExperimentConfig> parse_config_file(const std::string& text);

/// Re-parseable rendering, as printed by `defaults`.
std::string format_config(const ExperimentConfig& cfg);

/// Shortest decimal that round-trips the double (never more than 17
/// significant digits).
std::string format_double(double value);

/// Ordered, pre-formatted cells; one CSV line.
struct ResultRow {
  std::vector<std::pair<std::string, std::string>> cells;

  void add(const std::string& name, const std::string& value);
  void add(const std::string& name, const char* value);
  void add(const std::string& name, double value);
  void add(const std::string& name, int value);
  void add(const std::string& name, long value);
  void add(const std::string& name, bool value);
  void add(const std::string& name, Complex value);  // expands to _re/_im
  void add_empty(const std::string& name);
};

/// RFC-4180-style CSV with a mandatory header row. All rows must share one
/// schema.
void emit_csv(const std::vector<ResultRow>& rows, const std::filesystem::path& path);

/// gnuplot script next to the CSV; generated, never executed here.
std::filesystem::path emit_plot_script(const std::filesystem::path& csv_path, ExperimentId id);

struct RunnerOptions {
  std::filesystem::path out_dir = "out";
  int jobs = 0;  // 0 = hardware concurrency
  bool write_plots = true;
  unsigned seed = 0;  // reserved for generated test data; never enters data rows
};

struct ExperimentResult {
  std::vector<ResultRow> rows;
  std::vector<std::filesystem::path> files;
};

/// Runs the sweep the config describes and writes one CSV (plus plot
/// script) into out_dir. Infeasible sweep points become rows with a
/// nonempty `error` cell; the sweep continues.
ExperimentResult run_experiment(const ExperimentConfig& cfg, const RunnerOptions& options);

}  // namespace pintlab
