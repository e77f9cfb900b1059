#include "pintlab/transfer.hpp"

#include <cmath>

namespace pintlab {

namespace {

void check_compatible(const Grid1D& coarse, const Grid1D& fine) {
  if (coarse.domain_length != fine.domain_length || coarse.periodic != fine.periodic) {
    throw std::invalid_argument("transfer: grids must share domain and periodicity");
  }
  if (coarse.n_points > fine.n_points) {
    throw std::invalid_argument("transfer: coarse grid must not have more points than fine");
  }
}

// Rows of the matrix that evaluates the piecewise-linear interpolant of
// data on `source` at the nodes of `target`.
RealMatrix linear_interp_rows(const Grid1D& source, const Grid1D& target) {
  const int ns = source.n_points;
  const int nt = target.n_points;
  RealMatrix m = RealMatrix::Zero(nt, ns);
  for (int r = 0; r < nt; ++r) {
    const double x = target.node(r);
    if (source.periodic) {
      // cells [x_i, x_{i+1}) with wrap; the last cell closes the circle
      const double h = source.dx();
      int left = static_cast<int>(std::floor(x / h));
      left = std::min(std::max(left, 0), ns - 1);
      const double xl = left * h;
      const double theta = (x - xl) / h;
      m(r, left) += 1.0 - theta;
      m(r, (left + 1) % ns) += theta;
    } else {
      if (ns == 1) {
        m(r, 0) = 1.0;
        continue;
      }
      const double h = source.dx();
      // bracket clamped to the outermost cell, so edge rows extrapolate
      int left = static_cast<int>(std::floor(x / h)) - 1;
      left = std::min(std::max(left, 0), ns - 2);
      const double xl = source.node(left);
      const double theta = (x - xl) / h;
      m(r, left) += 1.0 - theta;
      m(r, left + 1) += theta;
    }
  }
  return m;
}

}  // namespace

const char* restriction_name(RestrictionMode m) {
  switch (m) {
    case RestrictionMode::Injection: return "injection";
    case RestrictionMode::LinearResample: return "linear_resample";
  }
  return "unknown";
}

bool grids_nested(const Grid1D& coarse, const Grid1D& fine) {
  check_compatible(coarse, fine);
  const double tol = 1e-12 * fine.domain_length;
  for (int j = 0; j < coarse.n_points; ++j) {
    const double x = coarse.node(j);
    const double ratio = x / fine.dx() - (fine.periodic ? 0.0 : 1.0);
    const double nearest = std::round(ratio);
    if (std::abs((ratio - nearest) * fine.dx()) > tol) {
      return false;
    }
    const int idx = static_cast<int>(nearest);
    if (idx < 0 || idx >= fine.n_points) {
      return false;
    }
  }
  return true;
}

RealMatrix build_linear_interpolation(const Grid1D& coarse, const Grid1D& fine) {
  check_compatible(coarse, fine);
  return linear_interp_rows(coarse, fine);
}

RealMatrix build_restriction(const Grid1D& coarse, const Grid1D& fine, RestrictionMode mode) {
  check_compatible(coarse, fine);
  switch (mode) {
    case RestrictionMode::Injection: {
      if (!grids_nested(coarse, fine)) {
        throw std::invalid_argument("build_restriction: injection needs nested grids");
      }
      RealMatrix m = RealMatrix::Zero(coarse.n_points, fine.n_points);
      for (int j = 0; j < coarse.n_points; ++j) {
        const double ratio = coarse.node(j) / fine.dx() - (fine.periodic ? 0.0 : 1.0);
        m(j, static_cast<int>(std::round(ratio))) = 1.0;
      }
      return m;
    }
    case RestrictionMode::LinearResample:
      return linear_interp_rows(fine, coarse);
  }
  throw std::invalid_argument("build_restriction: unknown mode");
}

TransferPair make_transfer_pair(const Grid1D& coarse, const Grid1D& fine, RestrictionMode mode) {
  TransferPair pair;
  pair.interpolation = build_linear_interpolation(coarse, fine);
  pair.restriction = build_restriction(coarse, fine, mode);
  pair.fine_grid = fine;
  pair.coarse_grid = coarse;
  return pair;
}

Matrix compose_coarse_propagator(const TransferPair& pair, const Matrix& coarse_step) {
  if (coarse_step.rows() != pair.coarse_grid.n_points ||
      coarse_step.cols() != pair.coarse_grid.n_points) {
    throw std::invalid_argument("compose_coarse_propagator: dimension mismatch");
  }
  return pair.interpolation.cast<Complex>() * coarse_step * pair.restriction.cast<Complex>();
}

Matrix compose_coarse_propagator(const TransferPair& pair, const Propagator& coarse_step) {
  return compose_coarse_propagator(pair, coarse_step.matrix);
}

}  // namespace pintlab
