#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pintlab/model.hpp"
#include "oracles.hpp"

#include <numbers>

using namespace pintlab;

namespace {

Vector dense_eigenvalues(const Matrix& m) {
  Eigen::ComplexEigenSolver<Matrix> solver(m, false);
  REQUIRE(solver.info() == Eigen::Success);
  Vector eigs = solver.eigenvalues();
  sort_by_decreasing_modulus(eigs);
  return eigs;
}

}  // namespace

TEST_CASE("upwind periodic advection matrix") {
  const Grid1D grid = make_grid(4, 4.0, true);
  const SystemMatrix sys = build_advection_matrix(grid, Scheme::UpwindPeriodic, 1.0);
  CHECK(sys.entries(0, 0) == Complex(-1.0, 0.0));
  CHECK(sys.entries(1, 0) == Complex(1.0, 0.0));
  CHECK(sys.entries(2, 0) == Complex(0.0, 0.0));
  CHECK(sys.entries(3, 0) == Complex(0.0, 0.0));
  // circulant: every column is the previous one shifted down by one
  for (int c = 1; c < 4; ++c) {
    for (int r = 0; r < 4; ++r) {
      CHECK(sys.entries((r + c) % 4, c) == sys.entries(r, 0));
    }
  }
  const Vector eigs = dense_eigenvalues(sys.entries);
  bool found_minus_two = false;
  bool found_zero = false;
  for (int i = 0; i < 4; ++i) {
    if (std::abs(eigs(i) - Complex(-2.0, 0.0)) < 1e-12) found_minus_two = true;
    if (std::abs(eigs(i)) < 1e-12) found_zero = true;
  }
  CHECK(found_minus_two);
  CHECK(found_zero);
}

TEST_CASE("centered periodic advection is purely oscillatory") {
  const Grid1D grid = make_grid(4, 4.0, true);
  const SystemMatrix sys = build_advection_matrix(grid, Scheme::CenteredPeriodic, 1.0);
  const Vector eigs = dense_eigenvalues(sys.entries);
  for (int i = 0; i < 4; ++i) {
    CHECK(std::abs(eigs(i).real()) <= 1e-14);
  }
}

TEST_CASE("zero velocity gives the zero matrix") {
  const Grid1D grid = make_grid(6, 2.0, true);
  const SystemMatrix sys = build_advection_matrix(grid, Scheme::UpwindPeriodic, 0.0);
  CHECK(sys.entries.norm() == 0.0);
}

TEST_CASE("heat matrix eigenvalues on four points") {
  const Grid1D grid = make_grid(4, 4.0, true);
  const SystemMatrix sys = build_heat_matrix(grid, 1.0);
  CHECK(sys.entries(0, 0) == Complex(-2.0, 0.0));
  CHECK(sys.entries(1, 0) == Complex(1.0, 0.0));
  CHECK(sys.entries(2, 0) == Complex(0.0, 0.0));
  CHECK(sys.entries(3, 0) == Complex(1.0, 0.0));
  const Vector eigs = circulant_eigenvalues(sys.entries.col(0));
  CHECK(std::abs(eigs(0) - Complex(-4.0, 0.0)) < 1e-12);
  CHECK(std::abs(eigs(1) - Complex(-2.0, 0.0)) < 1e-12);
  CHECK(std::abs(eigs(2) - Complex(-2.0, 0.0)) < 1e-12);
  CHECK(std::abs(eigs(3)) < 1e-12);
}

TEST_CASE("heat matrix has the constant mode") {
  const Grid1D grid = make_grid(12, 2.0, true);
  const SystemMatrix sys = build_heat_matrix(grid, 0.7);
  const Vector ones = Vector::Constant(12, Complex(1.0, 0.0));
  CHECK((sys.entries * ones).norm() <= 1e-12 * sys.entries.norm());
  CHECK(build_heat_matrix(grid, 0.0).entries.norm() == 0.0);
  CHECK_THROWS_AS(build_heat_matrix(grid, -1.0), std::invalid_argument);
}

TEST_CASE("advection-diffusion reduces to its parts") {
  const Grid1D grid = make_grid(8, 2.0, true);
  const SystemMatrix advection = build_advection_matrix(grid, Scheme::CenteredPeriodic, 1.0);
  const SystemMatrix heat = build_heat_matrix(grid, 1.0);
  const SystemMatrix both =
      build_advection_diffusion_matrix(grid, Scheme::CenteredPeriodic, 1.0, 1.0);
  CHECK((build_advection_diffusion_matrix(grid, Scheme::CenteredPeriodic, 1.0, 0.0).entries -
         advection.entries)
            .norm() == 0.0);
  CHECK((build_advection_diffusion_matrix(grid, Scheme::CenteredPeriodic, 0.0, 1.0).entries -
         heat.entries)
            .norm() == 0.0);
  CHECK((both.entries - advection.entries - heat.entries).norm() == 0.0);

  const Vector eigs = dense_eigenvalues(both.entries);
  for (int i = 0; i < 8; ++i) {
    CHECK(eigs(i).real() <= 1e-10);
  }
}

TEST_CASE("circulant eigenvalue formula against the dense solver") {
  std::mt19937_64 rng(7);
  for (int n : {2, 3, 8, 64}) {
    const Vector column = oracle::random_complex_vector(rng, n);
    Matrix dense(n, n);
    for (int c = 0; c < n; ++c) {
      for (int r = 0; r < n; ++r) {
        dense((r + c) % n, c) = column(r);
      }
    }
    const Vector via_formula = circulant_eigenvalues(column);
    const Vector via_solver = dense_eigenvalues(dense);
    for (int i = 0; i < n; ++i) {
      CHECK(std::abs(via_formula(i) - via_solver(i)) <= 1e-10 * std::max(1.0, column.norm()));
    }
  }
  CHECK_THROWS_AS(circulant_eigenvalues(Vector()), std::invalid_argument);

  // scaled identity: constant first column entry only
  Vector c = Vector::Zero(5);
  c(0) = Complex(-3.0, 1.0);
  const Vector eigs = circulant_eigenvalues(c);
  for (int i = 0; i < 5; ++i) {
    CHECK(eigs(i) == c(0));
  }
}

TEST_CASE("normality of the stock matrices") {
  for (int n : {2, 5, 64}) {
    const Grid1D grid = make_grid(n, 2.0, true);
    CHECK(build_advection_matrix(grid, Scheme::UpwindPeriodic, 1.0).normal);
    if (n >= 2) {
      CHECK(build_advection_matrix(grid, Scheme::CenteredPeriodic, 1.0).normal);
    }
    CHECK(build_heat_matrix(grid, 1.0).normal);

    const Grid1D interior = make_grid(n, 2.0, false);
    CHECK_FALSE(build_advection_matrix(interior, Scheme::UpwindDirichlet, 1.0).normal);
  }
  CHECK(is_normal(Matrix::Zero(3, 3), 1e-12));
}

TEST_CASE("upwind dirichlet matrix shape and spectrum") {
  const Grid1D grid = make_grid(4, 5.0, false);
  CHECK(grid.dx() == doctest::Approx(1.0));
  const SystemMatrix sys = build_advection_matrix(grid, Scheme::UpwindDirichlet, 1.0);
  for (int j = 0; j < 4; ++j) {
    CHECK(sys.entries(j, j) == Complex(-1.0, 0.0));
    if (j > 0) CHECK(sys.entries(j, j - 1) == Complex(1.0, 0.0));
  }
  const Vector eigs = system_eigenvalues(sys);
  for (int i = 0; i < 4; ++i) {
    CHECK(eigs(i) == Complex(-1.0, 0.0));
  }
}

TEST_CASE("builder preconditions") {
  const Grid1D periodic = make_grid(8, 2.0, true);
  const Grid1D interior = make_grid(8, 2.0, false);
  CHECK_THROWS_AS(build_advection_matrix(interior, Scheme::UpwindPeriodic, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_advection_matrix(periodic, Scheme::UpwindDirichlet, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_advection_matrix(periodic, Scheme::UpwindPeriodic, -1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_advection_matrix(make_grid(1, 1.0, true), Scheme::CenteredPeriodic, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_heat_matrix(interior, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(0, 1.0, true), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(4, 0.0, true), std::invalid_argument);
}

TEST_CASE("initial condition sampling") {
  const Grid1D grid = make_grid(64, 2.0, true);

  const Vector gauss = sample_initial_condition(GaussianIC{1.0, 0.25}, grid);
  CHECK(gauss.size() == 64);
  // node 32 sits exactly at x = 1
  CHECK(gauss(32).real() == doctest::Approx(1.0));
  CHECK(gauss(32).imag() == 0.0);

  SineSumIC sine;
  sine.modes = {{1.0, 1.0}, {24.0, 1.0}};
  const Vector s = sample_initial_condition(sine, grid);
  CHECK(std::abs(s(0)) <= 1e-14);
  double max_abs = 0.0;
  for (int j = 0; j < 64; ++j) max_abs = std::max(max_abs, std::abs(s(j)));
  CHECK(max_abs <= 2.0 + 1e-12);

  const Vector two_mode = sample_initial_condition(SinglePlusHighIC{0.5, 3}, grid);
  CHECK(std::abs(two_mode(0) - Complex(1.5, 0.0)) <= 1e-14);

  Vector custom_values = Vector::Zero(64);
  CHECK((sample_initial_condition(CustomIC{custom_values}, grid) - custom_values).norm() == 0.0);
  CHECK_THROWS_AS(sample_initial_condition(CustomIC{Vector::Zero(3)}, grid),
                  std::invalid_argument);
}

TEST_CASE("analytic sine-sum solution decays heat modes") {
  const Grid1D grid = make_grid(32, 2.0, true);
  SineSumIC ic;
  ic.modes = {{1.0, 1.0}};
  const Vector at0 = analytic_sine_sum_solution(ic, grid, 0.0, 1.0, 0.0);
  CHECK((at0 - sample_initial_condition(ic, grid)).norm() <= 1e-14);
  const Vector at1 = analytic_sine_sum_solution(ic, grid, 0.0, 1.0, 1.0);
  const double decay = std::exp(-std::numbers::pi * std::numbers::pi);
  CHECK((at1 - decay * at0).norm() <= 1e-12 * at0.norm());
}
