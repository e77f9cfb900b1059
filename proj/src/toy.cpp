#include "pintlab/toy.hpp"

#include <cmath>

namespace pintlab {

namespace {

void check_config(const TwoModeConfig& cfg) {
  if (cfg.nu < 0.0) {
    throw std::invalid_argument("two_mode: diffusivity must be nonnegative");
  }
  if (cfg.epsilon <= 0.0) {
    throw std::invalid_argument("two_mode: epsilon must be positive");
  }
  if (cfg.high_mode < 2) {
    throw std::invalid_argument("two_mode: high mode index must be at least 2");
  }
  if (cfg.slices < 1 || cfg.steps_per_slice < 1 || cfg.dt <= 0.0) {
    throw std::invalid_argument("two_mode: invalid time discretisation");
  }
}

// R(lambda dt)^{N_f}: the per-slice amplification of one mode.
Complex slice_factor(const TwoModeConfig& cfg, Complex lambda) {
  return std::pow(stability_function(cfg.method, lambda * cfg.dt), cfg.steps_per_slice);
}

}  // namespace

PararealSetup two_mode_setup(const TwoModeConfig& cfg) {
  check_config(cfg);
  Vector lambdas(2);
  lambdas << cfg.lambda_low(), cfg.lambda_high();
  const SystemMatrix fine_system = make_spectral_diagonal(lambdas);

  Vector coarse_lambda(1);
  coarse_lambda << cfg.lambda_low();
  const SystemMatrix coarse_system = make_spectral_diagonal(coarse_lambda);

  const Propagator fine = build_propagator(fine_system, cfg.dt, cfg.steps_per_slice, cfg.method);
  const Propagator coarse_step =
      build_propagator(coarse_system, cfg.dt, cfg.steps_per_slice, cfg.method);

  // Spectral truncation: keep the low mode, drop the high one.
  TransferPair pair;
  pair.interpolation = RealMatrix::Zero(2, 1);
  pair.interpolation(0, 0) = 1.0;
  pair.restriction = RealMatrix::Zero(1, 2);
  pair.restriction(0, 0) = 1.0;
  pair.fine_grid = fine_system.grid;
  pair.coarse_grid = coarse_system.grid;

  Vector initial(2);
  initial << Complex(1.0, 0.0), Complex(cfg.epsilon, 0.0);

  return make_setup(fine, compose_coarse_propagator(pair, coarse_step), cfg.slices,
                    std::move(initial), cfg.total_time());
}

double two_mode_error_after(const TwoModeConfig& cfg, int k) {
  check_config(cfg);
  if (cfg.slices != 3) {
    throw std::invalid_argument("two_mode_error_after: closed form is for 3 slices");
  }
  if (k < 0 || k > 3) {
    throw std::invalid_argument("two_mode_error_after: k must lie in 0..3");
  }
  // Starting from the coarse serial run, the error at slice boundary j has
  // only a high-mode component eps * r^j; each sweep zeroes one more block.
  // ||e^k||_2 = eps * sqrt(sum_{j=k+1}^{3} |r^j|^2) with r the high-mode
  // slice factor.
  const double r = std::abs(slice_factor(cfg, cfg.lambda_high()));
  double sum = 0.0;
  for (int j = k + 1; j <= 3; ++j) {
    sum += std::pow(r, 2.0 * j);
  }
  return cfg.epsilon * std::sqrt(sum);
}

double two_mode_error_vs_discretisation_ratio(const TwoModeConfig& cfg) {
  check_config(cfg);
  if (cfg.method == Method::ExactExponential) {
    throw std::invalid_argument(
        "two_mode_error_vs_discretisation_ratio: exact flow has no discretisation error");
  }
  if (cfg.epsilon != 1.0) {
    throw std::invalid_argument("two_mode_error_vs_discretisation_ratio: requires epsilon == 1");
  }
  if (cfg.slices != 3) {
    throw std::invalid_argument("two_mode_error_vs_discretisation_ratio: closed form is for 3 slices");
  }
  const double t_end = cfg.total_time();
  auto end_factor = [&](Complex lambda) {
    return std::pow(stability_function(cfg.method, lambda * cfg.dt), 3 * cfg.steps_per_slice);
  };
  const double eps_low = std::abs(end_factor(cfg.lambda_low()) - std::exp(cfg.lambda_low() * t_end));
  const double eps_high =
      std::abs(end_factor(cfg.lambda_high()) - std::exp(cfg.lambda_high() * t_end));
  const double denom = std::sqrt(eps_low * eps_low + eps_high * eps_high);
  if (denom == 0.0) {
    throw NumericalError("two_mode_error_vs_discretisation_ratio: zero discretisation error");
  }
  const double numer = std::abs(Complex(eps_low, 0.0) + std::exp(cfg.lambda_high() * t_end));
  return numer / denom;
}

}  // namespace pintlab
