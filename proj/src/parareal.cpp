#include "pintlab/parareal.hpp"

#include <cmath>

namespace pintlab {

namespace {

void check_composite(const PararealSetup& setup, const CompositeVector& v, const char* what) {
  if (v.block_count() != setup.slices + 1) {
    throw std::invalid_argument(std::string(what) + ": wrong number of blocks");
  }
  for (const Vector& block : v.blocks) {
    if (block.size() != setup.initial_state.size()) {
      throw std::invalid_argument(std::string(what) + ": block dimension mismatch");
    }
  }
}

CompositeVector serial_solve(const PararealSetup& setup, const Matrix& step) {
  CompositeVector out;
  out.blocks.resize(setup.slices + 1);
  out.blocks[0] = setup.initial_state;
  for (int j = 0; j < setup.slices; ++j) {
    out.blocks[j + 1] = step * out.blocks[j];
  }
  return out;
}

}  // namespace

CompositeVector operator-(const CompositeVector& a, const CompositeVector& b) {
  if (a.block_count() != b.block_count() || a.block_dim() != b.block_dim()) {
    throw std::invalid_argument("composite difference: shape mismatch");
  }
  CompositeVector out;
  out.blocks.resize(a.blocks.size());
  for (size_t j = 0; j < a.blocks.size(); ++j) {
    out.blocks[j] = a.blocks[j] - b.blocks[j];
  }
  return out;
}

double norm2(const CompositeVector& v) {
  double sum = 0.0;
  for (const Vector& block : v.blocks) {
    sum += block.squaredNorm();
  }
  return std::sqrt(sum);
}

double norm_inf(const CompositeVector& v) {
  double worst = 0.0;
  for (const Vector& block : v.blocks) {
    if (block.size() > 0) {
      worst = std::max(worst, block.cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

PararealSetup make_setup(Propagator fine, Matrix coarse, int slices, Vector initial_state,
                         double total_time) {
  if (slices < 1) {
    throw std::invalid_argument("make_setup: need at least one time slice");
  }
  if (total_time <= 0.0) {
    throw std::invalid_argument("make_setup: total time must be positive");
  }
  const Eigen::Index n = initial_state.size();
  if (fine.matrix.rows() != n || coarse.rows() != n || coarse.cols() != n) {
    throw std::invalid_argument("make_setup: propagator dimensions must match the state");
  }
  const double slice = total_time / slices;
  if (std::abs(fine.span() - slice) > 1e-12 * slice) {
    throw std::invalid_argument("make_setup: fine steps do not tile one slice");
  }
  PararealSetup setup;
  setup.fine = std::move(fine);
  setup.coarse = std::move(coarse);
  setup.slices = slices;
  setup.initial_state = std::move(initial_state);
  setup.total_time = total_time;
  return setup;
}

CompositeVector fine_serial_solve(const PararealSetup& setup) {
  return serial_solve(setup, setup.fine.matrix);
}

CompositeVector coarse_serial_solve(const PararealSetup& setup) {
  return serial_solve(setup, setup.coarse);
}

CompositeVector parareal_iterate(const PararealSetup& setup, const CompositeVector& previous) {
  check_composite(setup, previous, "parareal_iterate");
  if (!(previous.blocks[0] - setup.initial_state).isZero(0.0)) {
    throw std::invalid_argument("parareal_iterate: block 0 must hold the initial state");
  }
  CompositeVector next;
  next.blocks.resize(setup.slices + 1);
  next.blocks[0] = setup.initial_state;
  // The fine applications only touch the previous iterate and are
  // independent across slices; the coarse sweep is serial in j.
  std::vector<Vector> fine_terms(setup.slices);
  for (int j = 0; j < setup.slices; ++j) {
    fine_terms[j] = setup.fine.matrix * previous.blocks[j];
  }
  for (int j = 0; j < setup.slices; ++j) {
    next.blocks[j + 1] =
        setup.coarse * next.blocks[j] + fine_terms[j] - setup.coarse * previous.blocks[j];
  }
  return next;
}

RunTrace run_parareal(const PararealSetup& setup, const RunOptions& options) {
  if (options.max_iterations < 1) {
    throw std::invalid_argument("run_parareal: max_iterations must be at least 1");
  }
  RunTrace trace;
  trace.fine_solution = fine_serial_solve(setup);

  CompositeVector current;
  if (options.guess == InitialGuess::CoarseRun) {
    current = coarse_serial_solve(setup);
  } else {
    current.blocks.assign(setup.slices + 1, Vector::Zero(setup.dim()));
    current.blocks[0] = setup.initial_state;
  }

  auto record_error = [&](const CompositeVector& iterate) {
    const CompositeVector err = trace.fine_solution - iterate;
    trace.error_norm2.push_back(norm2(err));
    trace.error_norm_inf.push_back(norm_inf(err));
    if (options.keep_iterates) {
      trace.errors.push_back(err);
    }
  };

  if (options.keep_iterates) {
    trace.iterates.push_back(current);
  }
  record_error(current);

  for (int k = 0; k < options.max_iterations; ++k) {
    CompositeVector next = parareal_iterate(setup, current);
    const CompositeVector increment = next - current;
    trace.increment_norm2.push_back(norm2(increment));
    trace.increment_norm_inf.push_back(norm_inf(increment));
    if (options.keep_iterates) {
      trace.increments.push_back(increment);
      trace.iterates.push_back(next);
    }
    current = std::move(next);
    record_error(current);
    trace.iterations = k + 1;

    bool stop = false;
    if (options.monitor == StopMonitor::Increment) {
      stop = trace.increment_norm_inf.back() < options.stop_tol;
    } else if (options.monitor == StopMonitor::Error) {
      stop = trace.error_norm_inf.back() < options.stop_tol;
    }
    if (stop) {
      return trace;
    }
  }
  trace.hit_max = options.monitor != StopMonitor::None;
  return trace;
}

}  // namespace pintlab
