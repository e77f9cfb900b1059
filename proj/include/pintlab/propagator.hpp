#pragma once

#include "pintlab/model.hpp"

namespace pintlab {

enum class Method { ImplicitEuler, Trapezoidal, ExactExponential };

const char* method_name(Method m);

/// Order of consistency; the exact flow reports INT_MAX.
int method_order(Method m);

/// Value of the stability function at z. Throws NumericalError at the pole
/// (z = 1 for implicit Euler, z = 2 for the trapezoidal rule).
Complex stability_function(Method m, Complex z);

/// Dense matrix realising `steps` applications of a one-step method with
/// step size dt on dy/dt = A y, i.e. R(dt A)^steps.
struct Propagator {
  Matrix matrix;
  Method method = Method::ImplicitEuler;
  double dt = 0.0;
  int steps = 0;
  SystemMatrix source;

  int dim() const { return static_cast<int>(matrix.rows()); }
  double span() const { return dt * steps; }
};

Propagator build_propagator(const SystemMatrix& system, double dt, int steps, Method method);

Vector apply(const Propagator& prop, const Vector& y);

}  // namespace pintlab
