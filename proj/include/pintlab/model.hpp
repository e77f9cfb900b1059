#pragma once

#include "pintlab/linalg.hpp"

#include <variant>
#include <vector>

namespace pintlab {

/// Uniform 1-D mesh. Periodic grids place node j at j*dx with dx = L/n.
/// Dirichlet grids hold the n interior nodes x_j = (j+1)*dx with
/// dx = L/(n+1); the boundary values are fixed to zero and not stored.
struct Grid1D {
  int n_points = 0;
  double domain_length = 0.0;
  bool periodic = true;

  double dx() const {
    return periodic ? domain_length / n_points : domain_length / (n_points + 1);
  }
  double node(int j) const { return periodic ? j * dx() : (j + 1) * dx(); }
};

Grid1D make_grid(int n_points, double domain_length, bool periodic);

enum class Scheme {
  UpwindPeriodic,
  CenteredPeriodic,
  UpwindDirichlet,
  HeatCenteredPeriodic,
  SpectralDiagonal,
};

const char* scheme_name(Scheme s);
bool scheme_is_periodic(Scheme s);

/// Dense semi-discrete operator A of dy/dt = A y together with the
/// discretisation it came from. All builders guarantee max Re(lambda) <= 0
/// up to roundoff; well-posedness would fail otherwise.
struct SystemMatrix {
  Matrix entries;
  Scheme scheme = Scheme::SpectralDiagonal;
  Grid1D grid;
  double velocity = 0.0;
  double diffusivity = 0.0;
  bool normal = true;

  int dim() const { return static_cast<int>(entries.rows()); }
};

/// A for u_t = -velocity * u_x under the named stencil.
SystemMatrix build_advection_matrix(const Grid1D& grid, Scheme scheme, double velocity);

/// A for u_t = diffusivity * u_xx, centered second difference, periodic.
SystemMatrix build_heat_matrix(const Grid1D& grid, double diffusivity);

/// Sum of the advection operator for `scheme` and the centered
/// second-difference diffusion operator on the same grid.
SystemMatrix build_advection_diffusion_matrix(const Grid1D& grid, Scheme scheme,
                                              double velocity, double diffusivity);

/// Diagonal system in spectral coordinates; every lambda must satisfy
/// Re(lambda) <= 0.
SystemMatrix make_spectral_diagonal(const Vector& lambdas);

/// Eigenvalues of the circulant matrix with the given first column:
/// lambda_k = sum_j c_j exp(2 pi i j k / n). Sorted by decreasing modulus,
/// ties broken by decreasing real part, then decreasing imaginary part.
Vector circulant_eigenvalues(const Vector& first_column);

/// Sorts per the circulant_eigenvalues convention.
void sort_by_decreasing_modulus(Vector& values);

/// True iff || A A* - A* A ||_F <= tol * ||A||_F^2.
bool is_normal(const Matrix& a, double tol);

/// Spectrum of the system, sorted by decreasing modulus. Periodic stencils
/// use the circulant closed form, spectral systems read the diagonal, and
/// anything else goes through the dense eigensolver.
Vector system_eigenvalues(const SystemMatrix& system);

struct GaussianIC {
  double center = 1.0;
  double width = 0.25;
};

/// One term amplitude * sin(wavenumber * pi * x).
struct SineMode {
  double wavenumber = 1.0;
  double amplitude = 1.0;
};

struct SineSumIC {
  std::vector<SineMode> modes;
};

/// u0(x) = exp(i x) + epsilon * exp(i high_mode x).
struct SinglePlusHighIC {
  double epsilon = 1e-3;
  int high_mode = 24;
};

struct CustomIC {
  Vector values;
};

using InitialCondition = std::variant<GaussianIC, SineSumIC, SinglePlusHighIC, CustomIC>;

/// Pointwise evaluation at the grid nodes.
Vector sample_initial_condition(const InitialCondition& ic, const Grid1D& grid);

/// Exact PDE solution of u_t + velocity u_x = diffusivity u_xx for a sine-sum
/// initial value on a periodic domain, sampled at the grid nodes at time t.
Vector analytic_sine_sum_solution(const SineSumIC& ic, const Grid1D& grid,
                                  double velocity, double diffusivity, double t);

}  // namespace pintlab
