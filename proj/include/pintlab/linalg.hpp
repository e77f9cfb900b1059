#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>

namespace pintlab {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Numerical failure (singular solve, eigendecomposition breakdown, ...).
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// m^power by binary exponentiation; power >= 0, m square.
Matrix matrix_power(const Matrix& m, long power);

/// Singular values of a dense matrix, sorted decreasing.
RealVector singular_values(const Matrix& m);

/// Largest singular value, computed from a full SVD.
double norm2(const Matrix& m);

/// Induced infinity norm (max absolute row sum).
double norm_inf(const Matrix& m);

/// Count of singular values above rel_tol * sigma_max.
int numerical_rank(const Matrix& m, double rel_tol = 1e-10);

}  // namespace pintlab
