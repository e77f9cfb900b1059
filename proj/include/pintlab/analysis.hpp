#pragma once

#include "pintlab/parareal.hpp"

#include <string>

namespace pintlab {

/// Error propagation matrix of the Parareal iteration: strictly block lower
/// triangular with constant block diagonals, block (r, c) = B_{r-c-1} where
/// B_k = G^k (F - G). Nilpotent of index at most slices + 1.
struct ErrorMatrix {
  Matrix entries;              // (slices+1)*n square
  std::vector<Matrix> blocks;  // B_0 .. B_{slices-1}
  int slices = 0;
  int block_dim = 0;

  int dim() const { return (slices + 1) * block_dim; }
};

ErrorMatrix assemble_error_matrix(const Matrix& fine, const Matrix& coarse, int slices);

/// E * v using the block structure; v has slices+1 blocks.
CompositeVector apply(const ErrorMatrix& e, const CompositeVector& v);

struct PowerNormPoint {
  int power = 0;
  double norm2 = 0.0;
  double norm_inf = 0.0;
};

/// Norms of E^k for k = 0..max_power, by repeated multiplication.
std::vector<PowerNormPoint> power_norm_sweep(const ErrorMatrix& e, int max_power);

struct TailBound {
  double sum_bound = 0.0;     // sqrt of the tail sum of squared sigma(F)
  double single_bound = 0.0;  // sigma_{m+1}(F)
};

/// Lower bound on ||E||_2 for a normal system matrix when the coarse
/// propagator acts through a rank-m space. The singular values of F are
/// |R(lambda_j dt)^steps|; the bound is the Eckart-Young tail below the
/// m-th largest. Input eigenvalues must be sorted by decreasing modulus.
TailBound spectral_tail_bound(const Vector& eigs, Method method, double dt, int steps,
                              int coarse_dim);

/// max_i |sigma_i(F) - sigma_i(G)|, a lower bound on ||F - G||_2.
double singular_value_difference_bound(const Matrix& fine, const Matrix& coarse);

/// |exp(lambda * slice_length)|: the small-dt limit of the single bound.
double exact_mode_decay(Complex lambda, double slice_length);

/// The eigenvalue whose exact slice decay is the (coarse_dim+1)-th largest;
/// its decay factor is what the single bound tends to as dt -> 0.
Complex tail_mode(const Vector& eigs, double slice_length, int coarse_dim);

/// min(P/K, cost ratio of fine to coarse propagator).
double speedup_bound(int slices, int iterations, double cost_ratio);

struct BoundReport {
  double norm2_E = 0.0;
  double norm_inf_E = 0.0;
  double sum_bound = 0.0;
  double single_bound = 0.0;
  double general_bound = 0.0;
  double corollary_value = 0.0;
  RealVector singular_values_fine;
  RealVector singular_values_coarse;
  double norm2_B0 = 0.0;
  bool system_normal = false;
  int coarse_dim = 0;
  int coarse_rank = 0;
};

BoundReport compute_bound_report(const ErrorMatrix& e, const Matrix& fine, const Matrix& coarse,
                                 const Vector& eigs, Method method, double dt, int steps,
                                 int coarse_dim, bool system_normal);

enum class BoundStatus { Holds, Violated, HypothesisNotMet };

const char* bound_status_name(BoundStatus s);

struct BoundCheck {
  BoundStatus status = BoundStatus::HypothesisNotMet;
  std::string detail;

  bool holds() const { return status == BoundStatus::Holds; }
};

/// Checks the bound chain ||E||_2 >= sum_bound, ||E||_2 >= ||B_0||_2 and
/// ||B_0||_2 >= general_bound (all up to 1e-9). Reports HypothesisNotMet
/// instead of a verdict when the system matrix is not normal.
BoundCheck check_lower_bounds(const BoundReport& report);

}  // namespace pintlab
