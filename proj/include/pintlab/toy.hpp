#pragma once

#include "pintlab/analysis.hpp"
#include "pintlab/transfer.hpp"

namespace pintlab {

/// Two-mode spectral test problem for advection-diffusion: the state holds
/// the amplitudes of exp(i x) and exp(i L x), the system is diagonal with
/// lambda_low = -i - nu and lambda_high = -i L - nu L^2, and the coarse
/// level keeps only the low mode. Everything about the Parareal iteration
/// on this problem has a closed form, which makes it an exact oracle for
/// the full engine.
struct TwoModeConfig {
  double nu = 0.0;          // diffusivity
  double epsilon = 1e-3;    // initial amplitude of the high mode
  int high_mode = 24;       // L
  int slices = 3;
  Method method = Method::ExactExponential;
  double dt = 1.0 / 3.0;    // fine step
  int steps_per_slice = 1;  // N_f

  Complex lambda_low() const { return Complex(-nu, -1.0); }
  Complex lambda_high() const {
    return Complex(-nu * high_mode * high_mode, -static_cast<double>(high_mode));
  }
  double slice_length() const { return dt * steps_per_slice; }
  double total_time() const { return slices * slice_length(); }
};

/// Builds the 2x2 setup through the regular propagator and transfer paths:
/// F = diag(R(l1 dt)^N, R(l2 dt)^N), G = I R(l1 dt)^N R with I = (1 0)^T,
/// R = (1 0), initial state (1, epsilon).
PararealSetup two_mode_setup(const TwoModeConfig& cfg);

/// Closed-form ||e^k||_2 of the Parareal iteration started from the serial
/// coarse run, for slices == 3 and k in 0..3.
double two_mode_error_after(const TwoModeConfig& cfg, int k);

/// Ratio of the iteration error after two sweeps to the temporal
/// discretisation error of the fine method. Requires epsilon == 1 and an
/// inexact method (the ratio is undefined when the fine flow is exact).
double two_mode_error_vs_discretisation_ratio(const TwoModeConfig& cfg);

}  // namespace pintlab
