#include "pintlab/model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace pintlab {

namespace {

constexpr double kPi = std::numbers::pi;

Matrix circulant_from_first_column(const Vector& column) {
  const Eigen::Index n = column.size();
  Matrix m(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    for (Eigen::Index r = 0; r < n; ++r) {
      m((r + c) % n, c) = column(r);
    }
  }
  return m;
}

// Builders know their spectra in closed form; reject anything that would
// make the initial value problem ill-posed.
void require_stable_spectrum(const Vector& eigs, const char* what) {
  double max_abs = 0.0;
  for (Eigen::Index i = 0; i < eigs.size(); ++i) {
    max_abs = std::max(max_abs, std::abs(eigs(i)));
  }
  const double tol = 1e-10 * std::max(1.0, max_abs);
  for (Eigen::Index i = 0; i < eigs.size(); ++i) {
    if (eigs(i).real() > tol) {
      throw std::invalid_argument(std::string(what) +
                                  ": spectrum has an eigenvalue with positive real part");
    }
  }
}

Matrix dirichlet_advection(const Grid1D& grid, double velocity) {
  const int n = grid.n_points;
  const double a = velocity / grid.dx();
  Matrix m = Matrix::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    m(j, j) = Complex(-a, 0.0);
    if (j > 0) {
      m(j, j - 1) = Complex(a, 0.0);
    }
  }
  return m;
}

Vector heat_first_column(const Grid1D& grid, double diffusivity) {
  const int n = grid.n_points;
  const double c = diffusivity / (grid.dx() * grid.dx());
  Vector col = Vector::Zero(n);
  col(0) = Complex(-2.0 * c, 0.0);
  col(1 % n) += Complex(c, 0.0);
  col((n - 1) % n) += Complex(c, 0.0);
  return col;
}

Matrix dirichlet_diffusion(const Grid1D& grid, double diffusivity) {
  const int n = grid.n_points;
  const double c = diffusivity / (grid.dx() * grid.dx());
  Matrix m = Matrix::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    m(j, j) = Complex(-2.0 * c, 0.0);
    if (j > 0) {
      m(j, j - 1) = Complex(c, 0.0);
    }
    if (j + 1 < n) {
      m(j, j + 1) = Complex(c, 0.0);
    }
  }
  return m;
}

void check_scheme_grid(const Grid1D& grid, Scheme scheme) {
  if (scheme_is_periodic(scheme) != grid.periodic) {
    throw std::invalid_argument("system builder: scheme periodicity does not match grid");
  }
  if (scheme == Scheme::CenteredPeriodic && grid.n_points < 2) {
    throw std::invalid_argument("system builder: centered stencil needs at least 2 points");
  }
}

SystemMatrix finish(Matrix entries, Scheme scheme, const Grid1D& grid, double velocity,
                    double diffusivity) {
  SystemMatrix sys;
  sys.entries = std::move(entries);
  sys.scheme = scheme;
  sys.grid = grid;
  sys.velocity = velocity;
  sys.diffusivity = diffusivity;
  sys.normal = is_normal(sys.entries, 1e-12);
  return sys;
}

}  // namespace

Grid1D make_grid(int n_points, double domain_length, bool periodic) {
  if (n_points < 1) {
    throw std::invalid_argument("make_grid: need at least one point");
  }
  if (domain_length <= 0.0) {
    throw std::invalid_argument("make_grid: domain length must be positive");
  }
  return Grid1D{n_points, domain_length, periodic};
}

const char* scheme_name(Scheme s) {
  switch (s) {
    case Scheme::UpwindPeriodic: return "upwind_periodic";
    case Scheme::CenteredPeriodic: return "centered_periodic";
    case Scheme::UpwindDirichlet: return "upwind_dirichlet";
    case Scheme::HeatCenteredPeriodic: return "heat_centered_periodic";
    case Scheme::SpectralDiagonal: return "spectral_diagonal";
  }
  return "unknown";
}

bool scheme_is_periodic(Scheme s) {
  return s != Scheme::UpwindDirichlet;
}

SystemMatrix build_advection_matrix(const Grid1D& grid, Scheme scheme, double velocity) {
  check_scheme_grid(grid, scheme);
  const int n = grid.n_points;
  const double a = velocity / grid.dx();
  switch (scheme) {
    case Scheme::UpwindPeriodic: {
      if (velocity < 0.0) {
        throw std::invalid_argument("build_advection_matrix: upwind stencil assumes velocity >= 0");
      }
      Vector col = Vector::Zero(n);
      col(0) += Complex(-a, 0.0);
      col(1 % n) += Complex(a, 0.0);
      require_stable_spectrum(circulant_eigenvalues(col), "build_advection_matrix");
      return finish(circulant_from_first_column(col), scheme, grid, velocity, 0.0);
    }
    case Scheme::CenteredPeriodic: {
      const double h = velocity / (2.0 * grid.dx());
      Vector col = Vector::Zero(n);
      col(1 % n) += Complex(h, 0.0);
      col(n - 1) += Complex(-h, 0.0);
      require_stable_spectrum(circulant_eigenvalues(col), "build_advection_matrix");
      return finish(circulant_from_first_column(col), scheme, grid, velocity, 0.0);
    }
    case Scheme::UpwindDirichlet: {
      if (velocity < 0.0) {
        throw std::invalid_argument("build_advection_matrix: upwind stencil assumes velocity >= 0");
      }
      // Lower bidiagonal; the spectrum is the diagonal, -velocity/dx.
      return finish(dirichlet_advection(grid, velocity), scheme, grid, velocity, 0.0);
    }
    default:
      throw std::invalid_argument("build_advection_matrix: not an advection scheme");
  }
}

SystemMatrix build_heat_matrix(const Grid1D& grid, double diffusivity) {
  if (!grid.periodic) {
    throw std::invalid_argument("build_heat_matrix: periodic grid required");
  }
  if (diffusivity < 0.0) {
    throw std::invalid_argument("build_heat_matrix: negative diffusivity");
  }
  const Vector col = heat_first_column(grid, diffusivity);
  require_stable_spectrum(circulant_eigenvalues(col), "build_heat_matrix");
  return finish(circulant_from_first_column(col), Scheme::HeatCenteredPeriodic, grid, 0.0,
                diffusivity);
}

SystemMatrix build_advection_diffusion_matrix(const Grid1D& grid, Scheme scheme,
                                              double velocity, double diffusivity) {
  if (diffusivity < 0.0) {
    throw std::invalid_argument("build_advection_diffusion_matrix: negative diffusivity");
  }
  SystemMatrix advection = build_advection_matrix(grid, scheme, velocity);
  if (diffusivity == 0.0) {
    return advection;
  }
  if (grid.periodic) {
    advection.entries += build_heat_matrix(grid, diffusivity).entries;
  } else {
    advection.entries += dirichlet_diffusion(grid, diffusivity);
  }
  advection.diffusivity = diffusivity;
  advection.normal = is_normal(advection.entries, 1e-12);
  return advection;
}

SystemMatrix make_spectral_diagonal(const Vector& lambdas) {
  require_stable_spectrum(lambdas, "make_spectral_diagonal");
  SystemMatrix sys;
  sys.entries = Matrix(lambdas.asDiagonal());
  sys.scheme = Scheme::SpectralDiagonal;
  sys.grid = make_grid(static_cast<int>(lambdas.size()), 2.0 * kPi, true);
  sys.normal = true;
  return sys;
}

void sort_by_decreasing_modulus(Vector& values) {
  std::vector<Complex> v(values.data(), values.data() + values.size());
  std::sort(v.begin(), v.end(), [](const Complex& a, const Complex& b) {
    const double ma = std::abs(a);
    const double mb = std::abs(b);
    if (ma != mb) return ma > mb;
    if (a.real() != b.real()) return a.real() > b.real();
    return a.imag() > b.imag();
  });
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    values(i) = v[static_cast<size_t>(i)];
  }
}

Vector circulant_eigenvalues(const Vector& first_column) {
  const Eigen::Index n = first_column.size();
  if (n == 0) {
    throw std::invalid_argument("circulant_eigenvalues: empty input");
  }
  Vector eigs(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    Complex sum(0.0, 0.0);
    for (Eigen::Index j = 0; j < n; ++j) {
      const double angle = 2.0 * kPi * static_cast<double>(j) * static_cast<double>(k) /
                           static_cast<double>(n);
      sum += first_column(j) * Complex(std::cos(angle), std::sin(angle));
    }
    eigs(k) = sum;
  }
  sort_by_decreasing_modulus(eigs);
  return eigs;
}

bool is_normal(const Matrix& a, double tol) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("is_normal: matrix must be square");
  }
  const Matrix commutator = a * a.adjoint() - a.adjoint() * a;
  const double scale = a.norm();
  return commutator.norm() <= tol * scale * scale;
}

Vector system_eigenvalues(const SystemMatrix& system) {
  switch (system.scheme) {
    case Scheme::SpectralDiagonal: {
      Vector eigs = system.entries.diagonal();
      sort_by_decreasing_modulus(eigs);
      return eigs;
    }
    case Scheme::UpwindPeriodic:
    case Scheme::CenteredPeriodic:
    case Scheme::HeatCenteredPeriodic:
      return circulant_eigenvalues(system.entries.col(0));
    case Scheme::UpwindDirichlet: {
      Vector eigs;
      if (system.diffusivity == 0.0) {
        // lower triangular: the spectrum is the diagonal
        eigs = system.entries.diagonal();
      } else {
        Eigen::ComplexEigenSolver<Matrix> solver(system.entries, false);
        if (solver.info() != Eigen::Success) {
          throw NumericalError("system_eigenvalues: eigensolver did not converge");
        }
        eigs = solver.eigenvalues();
      }
      sort_by_decreasing_modulus(eigs);
      return eigs;
    }
  }
  throw std::invalid_argument("system_eigenvalues: unknown scheme");
}

Vector sample_initial_condition(const InitialCondition& ic, const Grid1D& grid) {
  const int n = grid.n_points;
  Vector out(n);
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, GaussianIC>) {
          for (int j = 0; j < n; ++j) {
            const double x = grid.node(j);
            const double d = (x - v.center) / v.width;
            out(j) = Complex(std::exp(-d * d), 0.0);
          }
        } else if constexpr (std::is_same_v<T, SineSumIC>) {
          for (int j = 0; j < n; ++j) {
            const double x = grid.node(j);
            double value = 0.0;
            for (const SineMode& mode : v.modes) {
              value += mode.amplitude * std::sin(mode.wavenumber * kPi * x);
            }
            out(j) = Complex(value, 0.0);
          }
        } else if constexpr (std::is_same_v<T, SinglePlusHighIC>) {
          for (int j = 0; j < n; ++j) {
            const double x = grid.node(j);
            out(j) = std::exp(Complex(0.0, x)) +
                     v.epsilon * std::exp(Complex(0.0, v.high_mode * x));
          }
        } else {
          if (v.values.size() != n) {
            throw std::invalid_argument("sample_initial_condition: custom vector has wrong length");
          }
          out = v.values;
        }
      },
      ic);
  return out;
}

Vector analytic_sine_sum_solution(const SineSumIC& ic, const Grid1D& grid, double velocity,
                                  double diffusivity, double t) {
  const int n = grid.n_points;
  Vector out = Vector::Zero(n);
  for (int j = 0; j < n; ++j) {
    const double x = grid.node(j);
    double value = 0.0;
    for (const SineMode& mode : ic.modes) {
      const double kappa = mode.wavenumber * kPi;
      value += mode.amplitude * std::exp(-diffusivity * kappa * kappa * t) *
               std::sin(kappa * (x - velocity * t));
    }
    out(j) = Complex(value, 0.0);
  }
  return out;
}

}  // namespace pintlab
