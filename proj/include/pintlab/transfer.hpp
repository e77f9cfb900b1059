#pragma once

#include "pintlab/propagator.hpp"

namespace pintlab {

enum class RestrictionMode { Injection, LinearResample };

const char* restriction_name(RestrictionMode m);

/// Grid transfer operators between a coarse and a fine mesh over the same
/// domain. Entries are real; they promote to complex on application.
struct TransferPair {
  RealMatrix interpolation;  // n x m, coarse -> fine
  RealMatrix restriction;    // m x n, fine -> coarse
  Grid1D fine_grid;
  Grid1D coarse_grid;
};

/// True when every coarse node coincides with a fine node.
bool grids_nested(const Grid1D& coarse, const Grid1D& fine);

/// Piecewise-linear interpolation matrix, coarse -> fine. Every row holds
/// barycentric weights for the bracketing coarse nodes and sums to one;
/// non-periodic grids extrapolate linearly past the outermost coarse nodes.
RealMatrix build_linear_interpolation(const Grid1D& coarse, const Grid1D& fine);

/// Restriction matrix, fine -> coarse. Injection picks the coincident fine
/// value (nested grids only); LinearResample evaluates the piecewise-linear
/// interpolant of the fine data at the coarse nodes.
RealMatrix build_restriction(const Grid1D& coarse, const Grid1D& fine, RestrictionMode mode);

TransferPair make_transfer_pair(const Grid1D& coarse, const Grid1D& fine, RestrictionMode mode);

/// Full coarse propagator interpolation * coarse_step * restriction, an
/// n x n matrix of rank at most m.
Matrix compose_coarse_propagator(const TransferPair& pair, const Matrix& coarse_step);
Matrix compose_coarse_propagator(const TransferPair& pair, const Propagator& coarse_step);

}  // namespace pintlab
