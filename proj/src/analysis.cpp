#include "pintlab/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace pintlab {

ErrorMatrix assemble_error_matrix(const Matrix& fine, const Matrix& coarse, int slices) {
  const Eigen::Index n = fine.rows();
  if (fine.cols() != n || coarse.rows() != n || coarse.cols() != n) {
    throw std::invalid_argument("assemble_error_matrix: F and G must be square and same size");
  }
  if (slices < 1) {
    throw std::invalid_argument("assemble_error_matrix: need at least one slice");
  }
  ErrorMatrix e;
  e.slices = slices;
  e.block_dim = static_cast<int>(n);
  e.blocks.resize(slices);
  e.blocks[0] = fine - coarse;
  for (int k = 1; k < slices; ++k) {
    e.blocks[k] = coarse * e.blocks[k - 1];
  }
  e.entries = Matrix::Zero((slices + 1) * n, (slices + 1) * n);
  for (int r = 1; r <= slices; ++r) {
    for (int c = 0; c < r; ++c) {
      e.entries.block(r * n, c * n, n, n) = e.blocks[r - c - 1];
    }
  }
  return e;
}

CompositeVector apply(const ErrorMatrix& e, const CompositeVector& v) {
  if (v.block_count() != e.slices + 1 || v.block_dim() != e.block_dim) {
    throw std::invalid_argument("error matrix apply: shape mismatch");
  }
  CompositeVector out;
  out.blocks.assign(e.slices + 1, Vector::Zero(e.block_dim));
  for (int r = 1; r <= e.slices; ++r) {
    for (int c = 0; c < r; ++c) {
      out.blocks[r] += e.blocks[r - c - 1] * v.blocks[c];
    }
  }
  return out;
}

std::vector<PowerNormPoint> power_norm_sweep(const ErrorMatrix& e, int max_power) {
  if (max_power < 0 || max_power > e.slices + 1) {
    throw std::invalid_argument("power_norm_sweep: power must lie in [0, slices+1]");
  }
  std::vector<PowerNormPoint> points;
  points.reserve(max_power + 1);
  Matrix current = Matrix::Identity(e.dim(), e.dim());
  points.push_back({0, 1.0, 1.0});
  for (int k = 1; k <= max_power; ++k) {
    current = current * e.entries;
    points.push_back({k, norm2(current), norm_inf(current)});
  }
  return points;
}

TailBound spectral_tail_bound(const Vector& eigs, Method method, double dt, int steps,
                              int coarse_dim) {
  const int n = static_cast<int>(eigs.size());
  if (coarse_dim < 0 || coarse_dim > n) {
    throw std::invalid_argument("spectral_tail_bound: coarse dimension out of range");
  }
  for (int j = 1; j < n; ++j) {
    if (std::abs(eigs(j)) > std::abs(eigs(j - 1)) * (1.0 + 1e-12)) {
      throw std::invalid_argument(
          "spectral_tail_bound: eigenvalues must be sorted by decreasing modulus");
    }
  }
  // Singular values of F = R(dt A)^steps for normal A are |R(lambda dt)|^steps;
  // sort them, then take the Eckart-Young tail below position coarse_dim.
  std::vector<double> sigma(n);
  for (int j = 0; j < n; ++j) {
    sigma[j] = std::pow(std::abs(stability_function(method, eigs(j) * dt)), steps);
  }
  std::sort(sigma.begin(), sigma.end(), std::greater<double>());
  TailBound bound;
  if (coarse_dim == n) {
    return bound;
  }
  double sum = 0.0;
  for (int j = coarse_dim; j < n; ++j) {
    sum += sigma[j] * sigma[j];
  }
  bound.sum_bound = std::sqrt(sum);
  bound.single_bound = sigma[coarse_dim];
  return bound;
}

double singular_value_difference_bound(const Matrix& fine, const Matrix& coarse) {
  if (fine.rows() != coarse.rows() || fine.cols() != coarse.cols()) {
    throw std::invalid_argument("singular_value_difference_bound: size mismatch");
  }
  const RealVector sf = singular_values(fine);
  const RealVector sg = singular_values(coarse);
  double worst = 0.0;
  for (Eigen::Index i = 0; i < sf.size(); ++i) {
    worst = std::max(worst, std::abs(sf(i) - sg(i)));
  }
  return worst;
}

double exact_mode_decay(Complex lambda, double slice_length) {
  if (slice_length <= 0.0) {
    throw std::invalid_argument("exact_mode_decay: slice length must be positive");
  }
  return std::abs(std::exp(lambda * slice_length));
}

Complex tail_mode(const Vector& eigs, double slice_length, int coarse_dim) {
  const int n = static_cast<int>(eigs.size());
  if (coarse_dim < 0 || coarse_dim >= n) {
    throw std::invalid_argument("tail_mode: coarse dimension out of range");
  }
  std::vector<Complex> v(eigs.data(), eigs.data() + n);
  std::sort(v.begin(), v.end(), [&](const Complex& a, const Complex& b) {
    return exact_mode_decay(a, slice_length) > exact_mode_decay(b, slice_length);
  });
  return v[coarse_dim];
}

double speedup_bound(int slices, int iterations, double cost_ratio) {
  if (iterations < 1) {
    throw std::invalid_argument("speedup_bound: need at least one iteration");
  }
  if (cost_ratio <= 0.0) {
    throw std::invalid_argument("speedup_bound: cost ratio must be positive");
  }
  return std::min(static_cast<double>(slices) / iterations, cost_ratio);
}

BoundReport compute_bound_report(const ErrorMatrix& e, const Matrix& fine, const Matrix& coarse,
                                 const Vector& eigs, Method method, double dt, int steps,
                                 int coarse_dim, bool system_normal) {
  BoundReport report;
  report.norm2_E = norm2(e.entries);
  report.norm_inf_E = norm_inf(e.entries);
  report.singular_values_fine = singular_values(fine);
  report.singular_values_coarse = singular_values(coarse);
  report.norm2_B0 = norm2(e.blocks.at(0));
  report.general_bound = singular_value_difference_bound(fine, coarse);
  report.system_normal = system_normal;
  report.coarse_dim = coarse_dim;
  report.coarse_rank = numerical_rank(coarse);
  if (system_normal) {
    const TailBound tail = spectral_tail_bound(eigs, method, dt, steps, coarse_dim);
    report.sum_bound = tail.sum_bound;
    report.single_bound = tail.single_bound;
    if (coarse_dim < static_cast<int>(eigs.size())) {
      report.corollary_value =
          exact_mode_decay(tail_mode(eigs, dt * steps, coarse_dim), dt * steps);
    }
  }
  return report;
}

const char* bound_status_name(BoundStatus s) {
  switch (s) {
    case BoundStatus::Holds: return "holds";
    case BoundStatus::Violated: return "violated";
    case BoundStatus::HypothesisNotMet: return "hypothesis_not_met";
  }
  return "unknown";
}

BoundCheck check_lower_bounds(const BoundReport& report) {
  BoundCheck check;
  if (!report.system_normal) {
    check.status = BoundStatus::HypothesisNotMet;
    check.detail = "system matrix is not normal; lower bound does not apply";
    return check;
  }
  constexpr double kSlack = 1e-9;
  std::ostringstream detail;
  bool ok = true;
  if (report.norm2_E < report.sum_bound - kSlack) {
    ok = false;
    detail << "norm2(E)=" << report.norm2_E << " below sum bound " << report.sum_bound << "; ";
  }
  if (report.norm2_E < report.norm2_B0 - kSlack) {
    ok = false;
    detail << "norm2(E)=" << report.norm2_E << " below norm2(B0)=" << report.norm2_B0 << "; ";
  }
  if (report.norm2_B0 < report.general_bound - kSlack) {
    ok = false;
    detail << "norm2(B0)=" << report.norm2_B0 << " below singular value gap "
           << report.general_bound << "; ";
  }
  check.status = ok ? BoundStatus::Holds : BoundStatus::Violated;
  check.detail = detail.str();
  return check;
}

}  // namespace pintlab
