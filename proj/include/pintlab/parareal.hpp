#pragma once

#include "pintlab/propagator.hpp"

#include <vector>

namespace pintlab {

/// State at every time-slice boundary: slices+1 blocks of equal length.
struct CompositeVector {
  std::vector<Vector> blocks;

  int block_count() const { return static_cast<int>(blocks.size()); }
  int block_dim() const { return blocks.empty() ? 0 : static_cast<int>(blocks.front().size()); }
};

CompositeVector operator-(const CompositeVector& a, const CompositeVector& b);

/// Euclidean norm of the stacked vector.
double norm2(const CompositeVector& v);

/// Largest entry modulus across all blocks.
double norm_inf(const CompositeVector& v);

struct PararealSetup {
  Propagator fine;       // n x n slice propagator F
  Matrix coarse;         // n x n composed coarse propagator G
  int slices = 0;        // P
  Vector initial_state;  // length n
  double total_time = 0.0;

  int dim() const { return static_cast<int>(initial_state.size()); }
  double slice_length() const { return total_time / slices; }
};

/// Validates block sizes and that the fine propagator tiles one slice
/// (steps * dt == T / P).
PararealSetup make_setup(Propagator fine, Matrix coarse, int slices, Vector initial_state,
                         double total_time);

/// Forward substitution y_{j+1} = F y_j.
CompositeVector fine_serial_solve(const PararealSetup& setup);

/// Forward substitution with the coarse propagator; the usual initial guess.
CompositeVector coarse_serial_solve(const PararealSetup& setup);

/// One sweep: block j+1 = G * new_j + F * prev_j - G * prev_j. Block 0 must
/// equal the initial state and is passed through unchanged.
CompositeVector parareal_iterate(const PararealSetup& setup, const CompositeVector& previous);

enum class StopMonitor { Increment, Error, None };
enum class InitialGuess { CoarseRun, Zero };

struct RunOptions {
  int max_iterations = 1;
  double stop_tol = 1e-6;
  StopMonitor monitor = StopMonitor::None;
  InitialGuess guess = InitialGuess::CoarseRun;
  bool keep_iterates = true;  // histories can be dropped for large sweeps
};

struct RunTrace {
  // index k = 0..iterations
  std::vector<CompositeVector> iterates;
  std::vector<CompositeVector> errors;      // e^k = y_fine - y^k
  std::vector<CompositeVector> increments;  // delta^k = y^{k+1} - y^k, k < iterations
  std::vector<double> error_norm2;
  std::vector<double> error_norm_inf;
  std::vector<double> increment_norm2;
  std::vector<double> increment_norm_inf;
  CompositeVector fine_solution;
  int iterations = 0;
  bool hit_max = false;  // max_iterations reached with the monitor still above tol
};

RunTrace run_parareal(const PararealSetup& setup, const RunOptions& options);

}  // namespace pintlab
