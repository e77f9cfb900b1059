#include "pintlab/experiments.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <system_error>

namespace pintlab {

namespace {

std::string csv_escape(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) {
    return cell;
  }
  std::string quoted = "\"";
  for (char c : cell) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

[[noreturn]] void io_fail(const std::filesystem::path& path) {
  throw std::system_error(errno, std::generic_category(), "cannot write " + path.string());
}

}  // namespace

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

void ResultRow::add(const std::string& name, const std::string& value) {
  cells.emplace_back(name, value);
}

void ResultRow::add(const std::string& name, const char* value) {
  cells.emplace_back(name, std::string(value));
}

void ResultRow::add(const std::string& name, double value) {
  cells.emplace_back(name, format_double(value));
}

void ResultRow::add(const std::string& name, int value) {
  cells.emplace_back(name, std::to_string(value));
}

void ResultRow::add(const std::string& name, long value) {
  cells.emplace_back(name, std::to_string(value));
}

void ResultRow::add(const std::string& name, bool value) {
  cells.emplace_back(name, value ? "true" : "false");
}

void ResultRow::add(const std::string& name, Complex value) {
  add(name + "_re", value.real());
  add(name + "_im", value.imag());
}

void ResultRow::add_empty(const std::string& name) {
  cells.emplace_back(name, std::string());
}

void emit_csv(const std::vector<ResultRow>& rows, const std::filesystem::path& path) {
  if (rows.empty()) {
    throw std::invalid_argument("emit_csv: no rows");
  }
  const ResultRow& first = rows.front();
  for (const ResultRow& row : rows) {
    if (row.cells.size() != first.cells.size()) {
      throw std::invalid_argument("emit_csv: rows disagree on schema");
    }
    for (size_t i = 0; i < row.cells.size(); ++i) {
      if (row.cells[i].first != first.cells[i].first) {
        throw std::invalid_argument("emit_csv: rows disagree on schema");
      }
    }
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) io_fail(path);
  for (size_t i = 0; i < first.cells.size(); ++i) {
    if (i) out << ',';
    out << csv_escape(first.cells[i].first);
  }
  out << '\n';
  for (const ResultRow& row : rows) {
    for (size_t i = 0; i < row.cells.size(); ++i) {
      if (i) out << ',';
      out << csv_escape(row.cells[i].second);
    }
    out << '\n';
  }
  if (!out) io_fail(path);
}

std::filesystem::path emit_plot_script(const std::filesystem::path& csv_path, ExperimentId id) {
  std::filesystem::path script_path = csv_path;
  script_path.replace_extension(".gp");
  std::ofstream out(script_path, std::ios::binary);
  if (!out) io_fail(script_path);

  const std::string csv = csv_path.filename().string();
  out << "# gnuplot 5 script for " << csv << "\n";
  out << "set datafile separator ','\n";
  out << "set key autotitle columnhead outside\n";
  out << "set grid\n";

  auto series_by = [&](const char* x, const char* y, const char* group,
                       const std::vector<std::string>& values) {
    out << "plot ";
    bool first_series = true;
    for (const std::string& v : values) {
      if (!first_series) out << ", \\\n     ";
      first_series = false;
      out << "'" << csv << "' using (strcol('" << group << "') eq '" << v << "' ? column('" << x
          << "') : 1/0):(column('" << y << "')) with linespoints title '" << group << "=" << v
          << "'";
    }
    out << "\n";
  };

  switch (id) {
    case ExperimentId::NormSweep:
    case ExperimentId::HeatNormSweep:
      out << "set logscale xy\n";
      out << "set xlabel 'fine step dt'\n";
      out << "set ylabel '||E||_2'\n";
      series_by("dt", "norm2_E", "m", {"32", "48", "63", "64"});
      break;
    case ExperimentId::PowerVsError:
    case ExperimentId::HeatRun:
      out << "set logscale y\n";
      out << "set xlabel 'iteration k'\n";
      out << "set ylabel 'norm'\n";
      series_by("k", "norm2_Ek", "m", {"32", "48", "63"});
      series_by("k", "error_norm2", "m", {"32", "48", "63"});
      break;
    case ExperimentId::SineDivergence:
      out << "set logscale y\n";
      out << "set xlabel 'iteration k'\n";
      out << "set ylabel '||e^k||_2'\n";
      series_by("k", "error_norm2", "m", {"32", "48", "63"});
      break;
    case ExperimentId::ToyDemo:
      out << "set logscale y\n";
      out << "set xlabel 'iteration k'\n";
      out << "set ylabel '||e^k||_2'\n";
      series_by("k", "engine_error", "epsilon", {"0.1", "0.001", "1e-06"});
      break;
    case ExperimentId::NonNormalAdvection:
      out << "set logscale y\n";
      out << "set xlabel 'iteration k'\n";
      out << "set ylabel 'norm'\n";
      series_by("k", "error_norm2", "m", {"48"});
      break;
    case ExperimentId::NonNormalAdvectionDiffusion:
      out << "set logscale y\n";
      out << "set xlabel 'iteration k'\n";
      out << "set ylabel '||e^k||_2'\n";
      series_by("k", "error_norm2", "diffusion", {"1", "0.1", "0.01", "0"});
      break;
  }
  if (!out) io_fail(script_path);
  return script_path;
}

}  // namespace pintlab
