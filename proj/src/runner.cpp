#include "pintlab/experiments.hpp"

#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <thread>

namespace pintlab {

namespace {

Method method_from_string(const std::string& name) {
  if (name == "implicit_euler") return Method::ImplicitEuler;
  if (name == "trapezoidal") return Method::Trapezoidal;
  if (name == "exact") return Method::ExactExponential;
  throw ConfigError("unknown method '" + name + "'");
}

Scheme periodic_scheme_from_string(const std::string& name) {
  if (name == "upwind") return Scheme::UpwindPeriodic;
  if (name == "centered") return Scheme::CenteredPeriodic;
  throw ConfigError("unknown scheme '" + name + "'");
}

RestrictionMode resolve_restriction(const std::string& requested, const Grid1D& coarse,
                                    const Grid1D& fine) {
  if (requested == "injection") return RestrictionMode::Injection;
  if (requested == "linear") return RestrictionMode::LinearResample;
  return grids_nested(coarse, fine) ? RestrictionMode::Injection
                                    : RestrictionMode::LinearResample;
}

std::vector<std::pair<std::string, std::string>> scheme_method_pairs(
    const ExperimentConfig& cfg) {
  std::vector<std::pair<std::string, std::string>> pairs;
  if (cfg.pairing == "zip") {
    if (cfg.schemes.size() != cfg.methods.size()) {
      throw ConfigError("zip pairing needs scheme and method lists of equal length");
    }
    for (size_t i = 0; i < cfg.schemes.size(); ++i) {
      pairs.emplace_back(cfg.schemes[i], cfg.methods[i]);
    }
  } else {
    for (const auto& s : cfg.schemes) {
      for (const auto& m : cfg.methods) {
        pairs.emplace_back(s, m);
      }
    }
  }
  return pairs;
}

InitialCondition config_initial_condition(const ExperimentConfig& cfg) {
  if (cfg.ic == "gaussian") {
    return GaussianIC{cfg.ic_center, cfg.ic_width};
  }
  if (cfg.ic_modes.size() != cfg.ic_amplitudes.size() || cfg.ic_modes.empty()) {
    throw ConfigError("ic_modes and ic_amplitudes must be nonempty lists of equal length");
  }
  SineSumIC ic;
  for (size_t i = 0; i < cfg.ic_modes.size(); ++i) {
    ic.modes.push_back({cfg.ic_modes[i], cfg.ic_amplitudes[i]});
  }
  return ic;
}

template <typename T>
std::string join_semicolon(const std::vector<T>& values) {
  std::ostringstream out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) out << ';';
    if constexpr (std::is_same_v<T, double>) {
      out << format_double(values[i]);
    } else {
      out << values[i];
    }
  }
  return out.str();
}

void parallel_for(int count, int jobs, const std::function<void(int)>& body) {
  if (jobs <= 0) {
    jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
  }
  jobs = std::min(jobs, count);
  if (jobs <= 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (int t = 0; t < jobs; ++t) {
    workers.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
        body(i);
      }
    });
  }
  for (auto& w : workers) w.join();
}

// One sweep point of an E-norm or trace experiment, fully assembled.
struct PointSetup {
  SystemMatrix system;
  Propagator fine;
  Matrix coarse;
  Vector eigenvalues;
  RestrictionMode restriction = RestrictionMode::LinearResample;
  double dt = 0.0;
  int fine_steps = 0;
  int coarse_steps = 0;
};

// scheme_label: "upwind"/"centered" (periodic), "heat" or "upwind_dirichlet".
PointSetup build_point(const ExperimentConfig& cfg, const std::string& scheme_label,
                       Method method, int m, const std::string& restriction, int nf,
                       double diffusion) {
  if (m < 1 || m > cfg.n) {
    throw ConfigError("coarse size m must lie in 1..n");
  }
  PointSetup point;
  const bool periodic = scheme_label != "upwind_dirichlet";
  const Grid1D fine_grid = make_grid(cfg.n, cfg.domain_length, periodic);
  const Grid1D coarse_grid = make_grid(m, cfg.domain_length, periodic);

  auto build_system = [&](const Grid1D& grid) {
    if (scheme_label == "heat") {
      return build_heat_matrix(grid, cfg.diffusivity);
    }
    if (scheme_label == "upwind_dirichlet") {
      return build_advection_diffusion_matrix(grid, Scheme::UpwindDirichlet, cfg.velocity,
                                              diffusion);
    }
    return build_advection_diffusion_matrix(grid, periodic_scheme_from_string(scheme_label),
                                            cfg.velocity, diffusion);
  };

  point.system = build_system(fine_grid);
  point.eigenvalues = system_eigenvalues(point.system);
  const double slice = cfg.total_time / cfg.slices;
  point.dt = slice / nf;
  point.fine_steps = nf;
  point.fine = build_propagator(point.system, point.dt, nf, method);

  const SystemMatrix coarse_system = build_system(coarse_grid);
  point.coarse_steps = cfg.coarse_steps > 0 ? cfg.coarse_steps : nf;
  const double coarse_dt = slice / point.coarse_steps;
  const Propagator coarse_step =
      build_propagator(coarse_system, coarse_dt, point.coarse_steps, method);
  point.restriction = resolve_restriction(restriction, coarse_grid, fine_grid);
  const TransferPair pair = make_transfer_pair(coarse_grid, fine_grid, point.restriction);
  point.coarse = compose_coarse_propagator(pair, coarse_step);
  return point;
}

struct NormSweepPoint {
  std::string scheme;
  std::string method;
  int m = 0;
  std::string restriction;
  int nf = 0;
};

std::vector<NormSweepPoint> enumerate_norm_sweep(const ExperimentConfig& cfg,
                                                 const std::string& fixed_scheme) {
  std::vector<NormSweepPoint> points;
  std::vector<std::pair<std::string, std::string>> pairs;
  if (fixed_scheme.empty()) {
    pairs = scheme_method_pairs(cfg);
  } else {
    for (const auto& m : cfg.methods) pairs.emplace_back(fixed_scheme, m);
  }
  const Grid1D fine_grid =
      make_grid(cfg.n, cfg.domain_length, fixed_scheme != "upwind_dirichlet");
  for (const auto& [scheme, method] : pairs) {
    for (int m : cfg.coarse_points) {
      // distinct resolved restriction modes, in request order
      std::vector<std::string> resolved;
      for (const auto& request : cfg.restrictions) {
        const Grid1D coarse_grid = make_grid(m, cfg.domain_length, fine_grid.periodic);
        std::string name;
        try {
          name = restriction_name(resolve_restriction(request, coarse_grid, fine_grid));
        } catch (const std::exception&) {
          name = request;  // infeasible; keep the request so the row reports the error
        }
        if (std::find(resolved.begin(), resolved.end(), name) == resolved.end()) {
          resolved.push_back(name);
        }
      }
      for (const auto& restriction : resolved) {
        for (int nf : cfg.fine_steps) {
          points.push_back({scheme, method, m, restriction, nf});
        }
      }
    }
  }
  return points;
}

std::string restriction_request_from_resolved(const std::string& resolved) {
  if (resolved == "injection") return "injection";
  if (resolved == "linear_resample") return "linear";
  return resolved;
}

ResultRow norm_sweep_row(const ExperimentConfig& cfg, const NormSweepPoint& p,
                         const std::string& scheme_label, double diffusivity) {
  ResultRow row;
  row.add("experiment", experiment_name(cfg.id));
  row.add("scheme", scheme_label);
  row.add("method", p.method);
  row.add("n", cfg.n);
  row.add("domain_length", cfg.domain_length);
  row.add("velocity", scheme_label == "heat" ? 0.0 : cfg.velocity);
  row.add("diffusivity", diffusivity);
  row.add("m", p.m);
  row.add("restriction", p.restriction);
  row.add("nf", p.nf);
  row.add("ng", cfg.coarse_steps > 0 ? cfg.coarse_steps : p.nf);
  row.add("slices", cfg.slices);
  row.add("total_time", cfg.total_time);
  row.add("dt", cfg.total_time / cfg.slices / p.nf);
  row.add("slice_length", cfg.total_time / cfg.slices);

  try {
    const PointSetup point =
        build_point(cfg, scheme_label == "heat" ? "heat" : p.scheme, method_from_string(p.method),
                    p.m, restriction_request_from_resolved(p.restriction), p.nf, diffusivity);
    const ErrorMatrix e = assemble_error_matrix(point.fine.matrix, point.coarse, cfg.slices);
    const BoundReport report = compute_bound_report(
        e, point.fine.matrix, point.coarse, point.eigenvalues, method_from_string(p.method),
        point.dt, p.nf, p.m, point.system.normal);
    const BoundCheck check = check_lower_bounds(report);
    row.add("norm2_E", report.norm2_E);
    row.add("norm_inf_E", report.norm_inf_E);
    row.add("sum_bound", report.sum_bound);
    row.add("single_bound", report.single_bound);
    row.add("general_bound", report.general_bound);
    row.add("corollary_value", report.corollary_value);
    row.add("norm2_B0", report.norm2_B0);
    row.add("coarse_rank", report.coarse_rank);
    row.add("system_normal", report.system_normal);
    row.add("bound_status", bound_status_name(check.status));
    row.add("bound_satisfied", check.holds());
    row.add("error", "");
  } catch (const std::exception& ex) {
    for (const char* name : {"norm2_E", "norm_inf_E", "sum_bound", "single_bound",
                             "general_bound", "corollary_value", "norm2_B0", "coarse_rank",
                             "system_normal", "bound_status", "bound_satisfied"}) {
      row.add_empty(name);
    }
    row.add("error", ex.what());
  }
  return row;
}

std::vector<ResultRow> run_norm_sweep(const ExperimentConfig& cfg, int jobs) {
  const bool heat = cfg.id == ExperimentId::HeatNormSweep;
  const std::vector<NormSweepPoint> points = enumerate_norm_sweep(cfg, heat ? "heat" : "");
  std::vector<ResultRow> rows(points.size());
  parallel_for(static_cast<int>(points.size()), jobs, [&](int i) {
    rows[i] = norm_sweep_row(cfg, points[i], heat ? "heat" : points[i].scheme,
                             heat ? cfg.diffusivity : 0.0);
  });
  return rows;
}

// Shared by the trace-style experiments: run Parareal, report per-iteration
// norms plus whatever extras the experiment defines.
struct TraceExtras {
  bool with_power_norms = true;
  bool with_bounds = true;
  double disc_error = std::numeric_limits<double>::quiet_NaN();
  std::string floor_kind;
  double diffusion = 0.0;
  bool qualitative = false;
};

std::vector<ResultRow> trace_rows(const ExperimentConfig& cfg, const std::string& scheme_label,
                                  const std::string& method_name_str, int m,
                                  const std::string& restriction_request, int nf,
                                  const TraceExtras& extras_in) {
  ResultRow base;
  TraceExtras extras = extras_in;
  base.add("experiment", experiment_name(cfg.id));
  base.add("scheme", scheme_label);
  base.add("method", method_name_str);
  base.add("n", cfg.n);
  base.add("domain_length", cfg.domain_length);
  base.add("velocity", scheme_label == "heat" ? 0.0 : cfg.velocity);
  base.add("diffusivity", scheme_label == "heat" ? cfg.diffusivity : extras.diffusion);
  base.add("m", m);
  base.add("nf", nf);
  base.add("ng", cfg.coarse_steps > 0 ? cfg.coarse_steps : nf);
  base.add("slices", cfg.slices);
  base.add("total_time", cfg.total_time);
  base.add("dt", cfg.total_time / cfg.slices / nf);
  base.add("ic", cfg.ic);
  base.add("ic_center", cfg.ic == "gaussian" ? format_double(cfg.ic_center) : "");
  base.add("ic_width", cfg.ic == "gaussian" ? format_double(cfg.ic_width) : "");
  base.add("ic_modes", cfg.ic == "sinesum" ? join_semicolon(cfg.ic_modes) : "");
  base.add("ic_amplitudes", cfg.ic == "sinesum" ? join_semicolon(cfg.ic_amplitudes) : "");
  base.add("stop_on", cfg.stop_on);
  base.add("stop_tol", cfg.stop_tol);

  auto error_rows = [&](const std::string& message) {
    ResultRow row = base;
    row.add_empty("restriction");
    row.add_empty("k");
    for (const char* name :
         {"norm2_Ek", "norm_inf_Ek", "error_norm2", "error_norm_inf", "increment_norm2",
          "increment_norm_inf", "norm2_E", "sum_bound", "single_bound", "system_normal",
          "bound_status", "disc_error", "floor_kind", "crossing_iteration", "max_growth",
          "speedup_at_crossing", "qualitative"}) {
      row.add_empty(name);
    }
    row.add("error", message);
    return std::vector<ResultRow>{row};
  };

  try {
    const Method method = method_from_string(method_name_str);
    const PointSetup point =
        build_point(cfg, scheme_label, method, m, restriction_request, nf, extras.diffusion);

    const InitialCondition ic = config_initial_condition(cfg);
    Vector initial = sample_initial_condition(ic, point.system.grid);

    const PararealSetup setup =
        make_setup(point.fine, point.coarse, cfg.slices, std::move(initial), cfg.total_time);
    RunOptions options;
    options.max_iterations = cfg.max_iterations > 0 ? cfg.max_iterations : cfg.slices;
    options.stop_tol = cfg.stop_tol;
    options.monitor = cfg.stop_on == "increment" ? StopMonitor::Increment
                      : cfg.stop_on == "error"   ? StopMonitor::Error
                                                 : StopMonitor::None;
    options.keep_iterates = false;
    const RunTrace trace = run_parareal(setup, options);

    // discretisation floors
    if (cfg.id == ExperimentId::HeatRun) {
      const Vector analytic = analytic_sine_sum_solution(
          std::get<SineSumIC>(ic), point.system.grid, 0.0, cfg.diffusivity, cfg.total_time);
      extras.disc_error = (trace.fine_solution.blocks.back() - analytic).norm();
      extras.floor_kind = "analytic_final_time";
    } else if (extras.qualitative) {
      const int refine = 32;
      const Propagator reference =
          build_propagator(point.system, point.dt / refine, nf * refine, method);
      Vector state = setup.initial_state;
      for (int j = 0; j < cfg.slices; ++j) {
        state = reference.matrix * state;
      }
      extras.disc_error = (trace.fine_solution.blocks.back() - state).norm();
      extras.floor_kind = "temporal_refinement_x32";
    }

    int crossing = -1;
    double max_growth = std::numeric_limits<double>::quiet_NaN();
    if (!std::isnan(extras.disc_error)) {
      for (size_t k = 0; k < trace.error_norm2.size(); ++k) {
        if (trace.error_norm2[k] < extras.disc_error) {
          crossing = static_cast<int>(k);
          break;
        }
      }
      if (trace.error_norm2.front() > 0.0) {
        max_growth = 0.0;
        for (double value : trace.error_norm2) {
          max_growth = std::max(max_growth, value / trace.error_norm2.front());
        }
      }
    }

    std::vector<PowerNormPoint> powers;
    double norm2_E = std::numeric_limits<double>::quiet_NaN();
    double sum_bound = std::numeric_limits<double>::quiet_NaN();
    double single_bound = std::numeric_limits<double>::quiet_NaN();
    std::string bound_status;
    if (extras.with_bounds || extras.with_power_norms) {
      const ErrorMatrix e = assemble_error_matrix(point.fine.matrix, point.coarse, cfg.slices);
      if (extras.with_power_norms) {
        powers = power_norm_sweep(e, static_cast<int>(trace.error_norm2.size()) - 1);
      }
      if (extras.with_bounds) {
        const BoundReport report =
            compute_bound_report(e, point.fine.matrix, point.coarse, point.eigenvalues, method,
                                 point.dt, nf, m, point.system.normal);
        norm2_E = report.norm2_E;
        sum_bound = report.sum_bound;
        single_bound = report.single_bound;
        bound_status = bound_status_name(check_lower_bounds(report).status);
      }
    }
    if (bound_status.empty()) {
      bound_status = point.system.normal ? "not_checked" : "hypothesis_not_met";
    }

    std::vector<ResultRow> rows;
    for (size_t k = 0; k < trace.error_norm2.size(); ++k) {
      ResultRow row = base;
      row.add("restriction", restriction_name(point.restriction));
      row.add("k", static_cast<int>(k));
      if (k < powers.size()) {
        row.add("norm2_Ek", powers[k].norm2);
        row.add("norm_inf_Ek", powers[k].norm_inf);
      } else {
        row.add_empty("norm2_Ek");
        row.add_empty("norm_inf_Ek");
      }
      row.add("error_norm2", trace.error_norm2[k]);
      row.add("error_norm_inf", trace.error_norm_inf[k]);
      if (k < trace.increment_norm2.size()) {
        row.add("increment_norm2", trace.increment_norm2[k]);
        row.add("increment_norm_inf", trace.increment_norm_inf[k]);
      } else {
        row.add_empty("increment_norm2");
        row.add_empty("increment_norm_inf");
      }
      if (extras.with_bounds) {
        row.add("norm2_E", norm2_E);
        row.add("sum_bound", sum_bound);
        row.add("single_bound", single_bound);
      } else {
        row.add_empty("norm2_E");
        row.add_empty("sum_bound");
        row.add_empty("single_bound");
      }
      row.add("system_normal", point.system.normal);
      row.add("bound_status", bound_status);
      if (std::isnan(extras.disc_error)) {
        row.add_empty("disc_error");
        row.add_empty("floor_kind");
        row.add_empty("crossing_iteration");
        row.add_empty("max_growth");
        row.add_empty("speedup_at_crossing");
      } else {
        row.add("disc_error", extras.disc_error);
        row.add("floor_kind", extras.floor_kind);
        row.add("crossing_iteration", crossing);
        row.add("max_growth", max_growth);
        if (crossing > 0) {
          row.add("speedup_at_crossing",
                  speedup_bound(cfg.slices, crossing, std::numeric_limits<double>::infinity()));
        } else {
          row.add_empty("speedup_at_crossing");
        }
      }
      row.add("qualitative", extras.qualitative ? "true" : "false");
      row.add("error", "");
      rows.push_back(std::move(row));
    }
    return rows;
  } catch (const std::exception& ex) {
    return error_rows(ex.what());
  }
}

std::vector<ResultRow> run_trace_experiment(const ExperimentConfig& cfg) {
  std::vector<ResultRow> rows;
  const bool heat = cfg.id == ExperimentId::HeatRun;
  const auto pairs = heat ? std::vector<std::pair<std::string, std::string>>{
                                {"heat", cfg.methods.at(0)}}
                          : scheme_method_pairs(cfg);
  for (const auto& [scheme, method] : pairs) {
    for (int m : cfg.coarse_points) {
      for (const auto& restriction : cfg.restrictions) {
        for (int nf : cfg.fine_steps) {
          TraceExtras extras;
          extras.with_power_norms = true;
          extras.with_bounds = true;
          auto point_rows = trace_rows(cfg, scheme, method, m, restriction, nf, extras);
          rows.insert(rows.end(), point_rows.begin(), point_rows.end());
        }
      }
    }
  }
  return rows;
}

std::vector<ResultRow> run_non_normal(const ExperimentConfig& cfg) {
  std::vector<ResultRow> rows;
  const std::vector<double> diffusion_values =
      cfg.id == ExperimentId::NonNormalAdvectionDiffusion ? cfg.diffusion
                                                          : std::vector<double>{0.0};
  for (double d : diffusion_values) {
    for (const auto& method : cfg.methods) {
      for (int m : cfg.coarse_points) {
        for (const auto& restriction : cfg.restrictions) {
          for (int nf : cfg.fine_steps) {
            TraceExtras extras;
            extras.with_power_norms = false;
            extras.with_bounds = false;
            extras.diffusion = d;
            extras.qualitative = true;
            auto point_rows =
                trace_rows(cfg, "upwind_dirichlet", method, m, restriction, nf, extras);
            rows.insert(rows.end(), point_rows.begin(), point_rows.end());
          }
        }
      }
    }
  }
  return rows;
}

std::vector<ResultRow> run_toy_demo(const ExperimentConfig& cfg) {
  std::vector<ResultRow> rows;
  for (double epsilon : cfg.epsilons) {
    ResultRow base;
    base.add("experiment", experiment_name(cfg.id));
    base.add("nu", cfg.diffusivity);
    base.add("epsilon", epsilon);
    base.add("high_mode", cfg.high_mode);
    base.add("method", cfg.methods.at(0));
    base.add("slices", cfg.slices);
    base.add("nf", cfg.fine_steps.at(0));
    const double dt = cfg.total_time / cfg.slices / cfg.fine_steps.at(0);
    base.add("dt", dt);
    try {
      TwoModeConfig toy;
      toy.nu = cfg.diffusivity;
      toy.epsilon = epsilon;
      toy.high_mode = cfg.high_mode;
      toy.slices = cfg.slices;
      toy.method = method_from_string(cfg.methods.at(0));
      toy.dt = dt;
      toy.steps_per_slice = cfg.fine_steps.at(0);

      const PararealSetup setup = two_mode_setup(toy);
      RunOptions options;
      options.max_iterations = cfg.slices;
      options.monitor = StopMonitor::None;
      const RunTrace trace = run_parareal(setup, options);

      const ErrorMatrix e = assemble_error_matrix(setup.fine.matrix, setup.coarse, cfg.slices);
      Vector eigs(2);
      eigs << toy.lambda_low(), toy.lambda_high();
      sort_by_decreasing_modulus(eigs);
      const TailBound tail = spectral_tail_bound(eigs, toy.method, toy.dt, toy.steps_per_slice, 1);
      const double norm_e = norm2(e.entries);

      for (int k = 0; k <= cfg.slices; ++k) {
        ResultRow row = base;
        row.add("k", k);
        if (cfg.slices == 3) {
          row.add("closed_form_error", two_mode_error_after(toy, k));
        } else {
          row.add_empty("closed_form_error");
        }
        row.add("engine_error", trace.error_norm2[k]);
        if (cfg.slices == 3) {
          row.add("abs_difference",
                  std::abs(trace.error_norm2[k] - two_mode_error_after(toy, k)));
        } else {
          row.add_empty("abs_difference");
        }
        row.add("norm2_E", norm_e);
        row.add("single_bound", tail.single_bound);
        row.add("error", "");
        rows.push_back(std::move(row));
      }
    } catch (const std::exception& ex) {
      ResultRow row = base;
      row.add_empty("k");
      for (const char* name :
           {"closed_form_error", "engine_error", "abs_difference", "norm2_E", "single_bound"}) {
        row.add_empty(name);
      }
      row.add("error", ex.what());
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string csv_stem(ExperimentId id) {
  switch (id) {
    case ExperimentId::NormSweep: return "norm_sweep";
    case ExperimentId::PowerVsError: return "power_vs_error";
    case ExperimentId::SineDivergence: return "sine_divergence";
    case ExperimentId::HeatNormSweep: return "heat_norm_sweep";
    case ExperimentId::HeatRun: return "heat_run";
    case ExperimentId::ToyDemo: return "toy_demo";
    case ExperimentId::NonNormalAdvection: return "non_normal_advection";
    case ExperimentId::NonNormalAdvectionDiffusion: return "non_normal_advection_diffusion";
  }
  return "experiment";
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& cfg, const RunnerOptions& options) {
  ExperimentResult result;
  switch (cfg.id) {
    case ExperimentId::NormSweep:
    case ExperimentId::HeatNormSweep:
      result.rows = run_norm_sweep(cfg, options.jobs);
      break;
    case ExperimentId::PowerVsError:
    case ExperimentId::SineDivergence:
    case ExperimentId::HeatRun:
      result.rows = run_trace_experiment(cfg);
      break;
    case ExperimentId::ToyDemo:
      result.rows = run_toy_demo(cfg);
      break;
    case ExperimentId::NonNormalAdvection:
    case ExperimentId::NonNormalAdvectionDiffusion:
      result.rows = run_non_normal(cfg);
      break;
  }
  std::filesystem::create_directories(options.out_dir);
  const std::filesystem::path csv_path = options.out_dir / (csv_stem(cfg.id) + ".csv");
  emit_csv(result.rows, csv_path);
  result.files.push_back(csv_path);
  if (options.write_plots) {
    result.files.push_back(emit_plot_script(csv_path, cfg.id));
  }
  return result;
}

}  // namespace pintlab
