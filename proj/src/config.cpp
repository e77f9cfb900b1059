#include "pintlab/experiments.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace pintlab {

namespace {

std::string trim(const std::string& s) {
  size_t begin = 0;
  size_t end = s.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
  return s.substr(begin, end - begin);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> items;
  std::string current;
  for (char c : s) {
    if (c == ',') {
      items.push_back(trim(current));
      current.clear();
    } else {
      current += c;
    }
  }
  items.push_back(trim(current));
  return items;
}

[[noreturn]] void fail(int line, const std::string& message) {
  throw ConfigError("config line " + std::to_string(line) + ": " + message);
}

double parse_double(const std::string& s, int line) {
  try {
    size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) fail(line, "trailing characters in number '" + s + "'");
    return v;
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception&) {
    fail(line, "expected a number, got '" + s + "'");
  }
}

int parse_int(const std::string& s, int line) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    fail(line, "expected an integer, got '" + s + "'");
  }
  return value;
}

struct KeyHandler {
  std::function<void(ExperimentConfig&, const std::string&, int)> set;
};

const std::map<std::string, KeyHandler>& key_table() {
  static const std::map<std::string, KeyHandler> table = {
      {"n", {[](ExperimentConfig& c, const std::string& v, int l) { c.n = parse_int(v, l); }}},
      {"domain_length",
       {[](ExperimentConfig& c, const std::string& v, int l) { c.domain_length = parse_double(v, l); }}},
      {"velocity",
       {[](ExperimentConfig& c, const std::string& v, int l) { c.velocity = parse_double(v, l); }}},
      {"diffusivity",
       {[](ExperimentConfig& c, const std::string& v, int l) { c.diffusivity = parse_double(v, l); }}},
      {"scheme",
       {[](ExperimentConfig& c, const std::string& v, int l) {
         c.schemes = split_list(v);
         for (const auto& s : c.schemes) {
           if (s != "upwind" && s != "centered") fail(l, "unknown scheme '" + s + "'");
         }
       }}},
      {"method",
       {[](ExperimentConfig& c, const std::string& v, int l) {
         c.methods = split_list(v);
         for (const auto& s : c.methods) {
           if (s != "implicit_euler" && s != "trapezoidal" && s != "exact") {
             fail(l, "unknown method '" + s + "'");
           }
         }
       }}},
      {"pairing",
       {[](ExperimentConfig& c, const std::string& v, int l) {
         if (v != "cross" && v != "zip") fail(l, "pairing must be cross or zip");
         c.pairing = v;
       }}},
      {"nf",
       {[](ExperimentConfig& c, const std::string& v, int l) {
         c.fine_steps.clear();
         for (const auto& item : split_list(v)) c.fine_steps.push_back(parse_int(item, l));
       }}},
      {"ng",
       {[](ExperimentConfig& c, const std::string& v, int l) { c.coarse_steps = parse_int(v, l); }}},
      {"m",
       {[](ExperimentConfig& c, const std::string& v, int l) {
         c.coarse_points.clear();
         for (const auto& item : split_list(v)) c.coarse_points.push_back(parse_int(item, l));
       }}},
      {"slices",
       {[](ExperimentConfig& c, const std::string& v, int l) { c.slices = parse_int(v, l); }}},
      {"total_time",
       {[](ExperimentConfig& c, const std::string& v, int l) { c.total_time = parse_double(v, l); }}},
      {"restriction",
       {[](ExperimentConfig& c, const std::string& v, int l) {
         c.restrictions = split_list(v);
         for (const auto& s : c.restrictions) {
           if (s != "auto" && s != "injection" && s != "linear") {
             fail(l, "unknown restriction '" + s + "'");
           }
         }
       }}},
      {"ic",
       {[](ExperimentConfig& c, const std::string& v, int l) {
         if (v != "gaussian" && v != "sinesum") fail(l, "unknown initial condition '" + v + "'");
         c.ic = v;
       }}},
      {"ic_center",
       {[](ExperimentConfig& c, const std::string& v, int l) { c.ic_center = parse_double(v, l); }}},
      {"ic_width",
       {[](ExperimentConfig& c, const std::string& v, int l) { c.ic_width = parse_double(v, l); }}},
      {"ic_modes",
       {[](ExperimentConfig& c, const std::string& v, int l) {
         c.ic_modes.clear();
         for (const auto& item : split_list(v)) c.ic_modes.push_back(parse_double(item, l));
       }}},
      {"ic_amplitudes",
       {[](ExperimentConfig& c, const std::string& v, int l) {
         c.ic_amplitudes.clear();
         for (const auto& item : split_list(v)) c.ic_amplitudes.push_back(parse_double(item, l));
       }}},
      {"epsilon",
       {[](ExperimentConfig& c, const std::string& v, int l) {
         c.epsilons.clear();
         for (const auto& item : split_list(v)) c.epsilons.push_back(parse_double(item, l));
       }}},
      {"high_mode",
       {[](ExperimentConfig& c, const std::string& v, int l) { c.high_mode = parse_int(v, l); }}},
      {"diffusion",
       {[](ExperimentConfig& c, const std::string& v, int l) {
         c.diffusion.clear();
         for (const auto& item : split_list(v)) c.diffusion.push_back(parse_double(item, l));
       }}},
      {"max_iterations",
       {[](ExperimentConfig& c, const std::string& v, int l) { c.max_iterations = parse_int(v, l); }}},
      {"stop_tol",
       {[](ExperimentConfig& c, const std::string& v, int l) { c.stop_tol = parse_double(v, l); }}},
      {"stop_on",
       {[](ExperimentConfig& c, const std::string& v, int l) {
         if (v != "none" && v != "increment" && v != "error") {
           fail(l, "stop_on must be none, increment or error");
         }
         c.stop_on = v;
       }}},
  };
  return table;
}

const std::set<std::string>& allowed_keys(ExperimentId id) {
  static const std::set<std::string> sweep = {"n",      "domain_length", "velocity",
                                              "scheme", "method",        "pairing",
                                              "nf",     "ng",            "m",
                                              "slices", "total_time",    "restriction"};
  static const std::set<std::string> trace = [] {
    std::set<std::string> keys = sweep;
    keys.insert({"ic", "ic_center", "ic_width", "ic_modes", "ic_amplitudes", "max_iterations",
                 "stop_tol", "stop_on"});
    return keys;
  }();
  static const std::set<std::string> heat_sweep = {
      "n", "domain_length", "diffusivity", "method", "nf", "ng", "m", "slices", "total_time",
      "restriction"};
  static const std::set<std::string> heat_run = [] {
    std::set<std::string> keys = heat_sweep;
    keys.insert({"ic_modes", "ic_amplitudes", "max_iterations", "stop_tol", "stop_on"});
    return keys;
  }();
  static const std::set<std::string> toy = {"diffusivity", "epsilon",    "high_mode", "method",
                                            "nf",          "slices",     "total_time"};
  static const std::set<std::string> non_normal = {
      "n",        "domain_length", "velocity",       "method",   "nf",
      "ng",       "m",             "slices",         "total_time", "restriction",
      "ic_modes", "ic_amplitudes", "max_iterations", "stop_tol", "stop_on"};
  static const std::set<std::string> non_normal_diffusion = [] {
    std::set<std::string> keys = non_normal;
    keys.insert("diffusion");
    return keys;
  }();
  switch (id) {
    case ExperimentId::NormSweep: return sweep;
    case ExperimentId::PowerVsError:
    case ExperimentId::SineDivergence: return trace;
    case ExperimentId::HeatNormSweep: return heat_sweep;
    case ExperimentId::HeatRun: return heat_run;
    case ExperimentId::ToyDemo: return toy;
    case ExperimentId::NonNormalAdvection: return non_normal;
    case ExperimentId::NonNormalAdvectionDiffusion: return non_normal_diffusion;
  }
  return sweep;
}

template <typename T>
std::string join(const std::vector<T>& values) {
  std::ostringstream out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) out << ", ";
    if constexpr (std::is_same_v<T, double>) {
      out << format_double(values[i]);
    } else {
      out << values[i];
    }
  }
  return out.str();
}

}  // namespace

const char* experiment_name(ExperimentId id) {
  switch (id) {
    case ExperimentId::NormSweep: return "NormSweep";
    case ExperimentId::PowerVsError: return "PowerVsError";
    case ExperimentId::SineDivergence: return "SineDivergence";
    case ExperimentId::HeatNormSweep: return "HeatNormSweep";
    case ExperimentId::HeatRun: return "HeatRun";
    case ExperimentId::ToyDemo: return "ToyDemo";
    case ExperimentId::NonNormalAdvection: return "NonNormalAdvection";
    case ExperimentId::NonNormalAdvectionDiffusion: return "NonNormalAdvectionDiffusion";
  }
  return "unknown";
}

const char* experiment_summary(ExperimentId id) {
  switch (id) {
    case ExperimentId::NormSweep:
      return "||E||_2 of the advection problem against the fine step, per coarse size";
    case ExperimentId::PowerVsError:
      return "norms of E^k next to actual iteration errors for a Gaussian pulse";
    case ExperimentId::SineDivergence:
      return "iteration error for the centered scheme with a two-sine initial value";
    case ExperimentId::HeatNormSweep:
      return "||E||_2 for the heat equation against the fine step, per coarse size";
    case ExperimentId::HeatRun:
      return "heat equation run recording where the error meets the discretisation floor";
    case ExperimentId::ToyDemo:
      return "two-mode spectral problem: closed forms against the full engine";
    case ExperimentId::NonNormalAdvection:
      return "inflow-boundary upwind advection at 40 slices (non-normal, qualitative)";
    case ExperimentId::NonNormalAdvectionDiffusion:
      return "inflow-boundary advection-diffusion sweep over D (non-normal, qualitative)";
  }
  return "";
}

std::optional<ExperimentId> experiment_from_name(const std::string& name) {
  for (ExperimentId id : all_experiments()) {
    if (name == experiment_name(id)) {
      return id;
    }
  }
  return std::nullopt;
}

std::vector<ExperimentId> all_experiments() {
  return {ExperimentId::NormSweep,     ExperimentId::PowerVsError,
          ExperimentId::SineDivergence, ExperimentId::HeatNormSweep,
          ExperimentId::HeatRun,        ExperimentId::ToyDemo,
          ExperimentId::NonNormalAdvection, ExperimentId::NonNormalAdvectionDiffusion};
}

ExperimentConfig default_config(ExperimentId id) {
  ExperimentConfig cfg;
  cfg.id = id;
  switch (id) {
    case ExperimentId::NormSweep:
      cfg.schemes = {"upwind", "centered"};
      cfg.methods = {"implicit_euler", "trapezoidal"};
      cfg.pairing = "cross";
      cfg.fine_steps = {1, 2, 4, 6, 8, 10, 20};
      cfg.coarse_points = {32, 48, 63, 64};
      cfg.restrictions = {"auto", "linear"};
      break;
    case ExperimentId::PowerVsError:
      cfg.schemes = {"upwind", "centered"};
      cfg.methods = {"implicit_euler", "trapezoidal"};
      cfg.pairing = "zip";
      cfg.fine_steps = {10};
      cfg.coarse_points = {32, 48, 63};
      cfg.restrictions = {"auto"};
      cfg.ic = "gaussian";
      break;
    case ExperimentId::SineDivergence:
      cfg.schemes = {"centered"};
      cfg.methods = {"trapezoidal"};
      cfg.pairing = "zip";
      cfg.fine_steps = {10};
      cfg.coarse_points = {32, 48, 63};
      cfg.restrictions = {"auto"};
      cfg.ic = "sinesum";
      cfg.ic_modes = {1, 24};
      cfg.ic_amplitudes = {1, 1};
      break;
    case ExperimentId::HeatNormSweep:
      cfg.methods = {"trapezoidal"};
      cfg.fine_steps = {1, 2, 4, 6, 8, 10, 20};
      cfg.coarse_points = {32, 48, 63, 64};
      cfg.restrictions = {"auto"};
      cfg.diffusivity = 1.0;
      break;
    case ExperimentId::HeatRun:
      cfg.methods = {"trapezoidal"};
      cfg.fine_steps = {10};
      cfg.coarse_points = {32};
      cfg.restrictions = {"auto"};
      cfg.diffusivity = 1.0;
      cfg.ic = "sinesum";
      cfg.ic_modes = {1, 24};
      cfg.ic_amplitudes = {1, 1};
      break;
    case ExperimentId::ToyDemo:
      cfg.methods = {"exact"};
      cfg.fine_steps = {1};
      cfg.slices = 3;
      cfg.diffusivity = 0.0;
      cfg.epsilons = {1e-1, 1e-3, 1e-6};
      cfg.high_mode = 24;
      break;
    case ExperimentId::NonNormalAdvection:
      cfg.domain_length = 4.0;
      cfg.methods = {"trapezoidal"};
      cfg.fine_steps = {1200};
      cfg.coarse_points = {48};
      cfg.restrictions = {"auto"};
      cfg.slices = 40;
      cfg.ic = "sinesum";
      cfg.ic_modes = {2};
      cfg.ic_amplitudes = {1};
      break;
    case ExperimentId::NonNormalAdvectionDiffusion:
      cfg.domain_length = 4.0;
      cfg.methods = {"trapezoidal"};
      cfg.fine_steps = {4};
      cfg.coarse_points = {48};
      cfg.restrictions = {"auto"};
      cfg.slices = 40;
      cfg.ic = "sinesum";
      cfg.ic_modes = {1, 2, 3, 4, 5, 6, 7, 8};
      cfg.ic_amplitudes = {1.0,       1.0 / 4.0,  1.0 / 9.0,  1.0 / 16.0,
                           1.0 / 25.0, 1.0 / 36.0, 1.0 / 49.0, 1.0 / 64.0};
      cfg.diffusion = {1.0, 0.1, 0.01, 0.0};
      break;
  }
  return cfg;
}

std::vector<ExperimentConfig> parse_config_file(const std::string& text) {
  std::vector<ExperimentConfig> configs;
  std::optional<ExperimentConfig> current;
  std::istringstream stream(text);
  std::string raw;
  int line_no = 0;
  auto flush = [&] {
    if (current) {
      configs.push_back(*current);
      current.reset();
    }
  };
  while (std::getline(stream, raw)) {
    ++line_no;
    const size_t hash = raw.find('#');
    if (hash != std::string::npos) {
      raw.erase(hash);
    }
    const std::string line = trim(raw);
    if (line.empty()) {
      continue;
    }
    if (line.front() == '[') {
      if (line.back() != ']') fail(line_no, "unterminated section header");
      const std::string name = trim(line.substr(1, line.size() - 2));
      const auto id = experiment_from_name(name);
      if (!id) fail(line_no, "unknown experiment '" + name + "'");
      flush();
      current = default_config(*id);
      continue;
    }
    const size_t eq = line.find('=');
    if (eq == std::string::npos) fail(line_no, "expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "experiment") {
      const auto id = experiment_from_name(value);
      if (!id) fail(line_no, "unknown experiment '" + value + "'");
      flush();
      current = default_config(*id);
      continue;
    }
    if (!current) {
      current = default_config(ExperimentId::NormSweep);
    }
    const auto handler = key_table().find(key);
    if (handler == key_table().end() || !allowed_keys(current->id).count(key)) {
      fail(line_no, "unknown key '" + key + "' for experiment " +
                        experiment_name(current->id));
    }
    handler->second.set(*current, value, line_no);
  }
  flush();
  if (configs.empty()) {
    configs.push_back(default_config(ExperimentId::NormSweep));
  }
  return configs;
}

ExperimentConfig parse_config(const std::string& text) {
  const std::vector<ExperimentConfig> configs = parse_config_file(text);
  if (configs.size() != 1) {
    throw ConfigError("expected a single experiment section, found " +
                      std::to_string(configs.size()));
  }
  return configs.front();
}

std::string format_config(const ExperimentConfig& cfg) {
  std::ostringstream out;
  out << "[" << experiment_name(cfg.id) << "]\n";
  const auto& keys = allowed_keys(cfg.id);
  auto emit = [&](const char* key, const std::string& value) {
    if (keys.count(key)) out << key << " = " << value << "\n";
  };
  emit("n", std::to_string(cfg.n));
  emit("domain_length", format_double(cfg.domain_length));
  emit("velocity", format_double(cfg.velocity));
  emit("diffusivity", format_double(cfg.diffusivity));
  emit("scheme", join(cfg.schemes));
  emit("method", join(cfg.methods));
  emit("pairing", cfg.pairing);
  emit("nf", join(cfg.fine_steps));
  emit("ng", std::to_string(cfg.coarse_steps));
  emit("m", join(cfg.coarse_points));
  emit("slices", std::to_string(cfg.slices));
  emit("total_time", format_double(cfg.total_time));
  emit("restriction", join(cfg.restrictions));
  emit("ic", cfg.ic);
  if (cfg.ic == "gaussian") {
    emit("ic_center", format_double(cfg.ic_center));
    emit("ic_width", format_double(cfg.ic_width));
  } else {
    emit("ic_modes", join(cfg.ic_modes));
    emit("ic_amplitudes", join(cfg.ic_amplitudes));
  }
  emit("epsilon", join(cfg.epsilons));
  emit("high_mode", std::to_string(cfg.high_mode));
  emit("diffusion", join(cfg.diffusion));
  emit("max_iterations", std::to_string(cfg.max_iterations));
  emit("stop_tol", format_double(cfg.stop_tol));
  emit("stop_on", cfg.stop_on);
  return out.str();
}

}  // namespace pintlab
