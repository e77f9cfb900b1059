#include "pintlab/propagator.hpp"

#include <climits>
#include <cmath>

namespace pintlab {

namespace {

Matrix invert_or_throw(const Matrix& m, const char* what) {
  Eigen::FullPivLU<Matrix> lu(m);
  if (!lu.isInvertible()) {
    throw NumericalError(std::string(what) + ": singular linear system");
  }
  return lu.inverse();
}

Matrix single_step_matrix(const SystemMatrix& system, double dt, Method method) {
  const Eigen::Index n = system.entries.rows();
  const Matrix identity = Matrix::Identity(n, n);
  switch (method) {
    case Method::ImplicitEuler:
      return invert_or_throw(identity - dt * system.entries, "build_propagator");
    case Method::Trapezoidal: {
      const Matrix half = 0.5 * dt * system.entries;
      return invert_or_throw(identity - half, "build_propagator") * (identity + half);
    }
    case Method::ExactExponential: {
      Eigen::ComplexEigenSolver<Matrix> solver(system.entries);
      if (solver.info() != Eigen::Success) {
        throw NumericalError("build_propagator: eigendecomposition failed");
      }
      const Matrix& vectors = solver.eigenvectors();
      Eigen::FullPivLU<Matrix> lu(vectors);
      if (!lu.isInvertible()) {
        throw NumericalError("build_propagator: system is not diagonalizable");
      }
      Vector factors(n);
      for (Eigen::Index i = 0; i < n; ++i) {
        factors(i) = std::exp(solver.eigenvalues()(i) * dt);
      }
      return vectors * factors.asDiagonal() * lu.inverse();
    }
  }
  throw std::invalid_argument("build_propagator: unknown method");
}

}  // namespace

const char* method_name(Method m) {
  switch (m) {
    case Method::ImplicitEuler: return "implicit_euler";
    case Method::Trapezoidal: return "trapezoidal";
    case Method::ExactExponential: return "exact";
  }
  return "unknown";
}

int method_order(Method m) {
  switch (m) {
    case Method::ImplicitEuler: return 1;
    case Method::Trapezoidal: return 2;
    case Method::ExactExponential: return INT_MAX;
  }
  return 0;
}

Complex stability_function(Method m, Complex z) {
  switch (m) {
    case Method::ImplicitEuler: {
      const Complex denom = 1.0 - z;
      if (denom == Complex(0.0, 0.0)) {
        throw NumericalError("stability_function: implicit Euler pole at z = 1");
      }
      return 1.0 / denom;
    }
    case Method::Trapezoidal: {
      const Complex denom = 1.0 - 0.5 * z;
      if (denom == Complex(0.0, 0.0)) {
        throw NumericalError("stability_function: trapezoidal pole at z = 2");
      }
      return (1.0 + 0.5 * z) / denom;
    }
    case Method::ExactExponential:
      return std::exp(z);
  }
  throw std::invalid_argument("stability_function: unknown method");
}

Propagator build_propagator(const SystemMatrix& system, double dt, int steps, Method method) {
  if (dt <= 0.0) {
    throw std::invalid_argument("build_propagator: dt must be positive");
  }
  if (steps < 1) {
    throw std::invalid_argument("build_propagator: need at least one step");
  }
  Propagator prop;
  prop.matrix = matrix_power(single_step_matrix(system, dt, method), steps);
  prop.method = method;
  prop.dt = dt;
  prop.steps = steps;
  prop.source = system;
  return prop;
}

Vector apply(const Propagator& prop, const Vector& y) {
  if (y.size() != prop.matrix.cols()) {
    throw std::invalid_argument("apply: state dimension mismatch");
  }
  return prop.matrix * y;
}

}  // namespace pintlab
