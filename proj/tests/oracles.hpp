// Test-side reference implementations, kept independent of the library
// code paths they check.
#pragma once

#include "pintlab/linalg.hpp"

#include <random>

namespace pintlab::oracle {

// Dense composite system M (identity diagonal, -step on the subdiagonal
// blocks), as written out for the serial fine solve.
inline Matrix composite_system(const Matrix& step, int slices) {
  const Eigen::Index n = step.rows();
  Matrix m = Matrix::Identity((slices + 1) * n, (slices + 1) * n);
  for (int j = 0; j < slices; ++j) {
    m.block((j + 1) * n, j * n, n, n) = -step;
  }
  return m;
}

// E = M_g^{-1} (M_g - M_f), with the inverse applied by block forward
// substitution: row block r of the solution X of M_g X = RHS satisfies
// X_r = RHS_r + G X_{r-1}.
inline Matrix error_matrix_brute_force(const Matrix& fine, const Matrix& coarse, int slices) {
  const Eigen::Index n = fine.rows();
  const Matrix mg = composite_system(coarse, slices);
  const Matrix mf = composite_system(fine, slices);
  const Matrix rhs = mg - mf;
  Matrix x = Matrix::Zero(rhs.rows(), rhs.cols());
  for (int r = 0; r <= slices; ++r) {
    x.middleRows(r * n, n) = rhs.middleRows(r * n, n);
    if (r > 0) {
      x.middleRows(r * n, n) += coarse * x.middleRows((r - 1) * n, n);
    }
  }
  return x;
}

// Largest singular value by power iteration on A* A.
inline double power_iteration_norm2(const Matrix& a, int iterations = 500) {
  if (a.size() == 0) return 0.0;
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Vector v(a.cols());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    v(i) = Complex(dist(rng), dist(rng));
  }
  v.normalize();
  double value = 0.0;
  for (int it = 0; it < iterations; ++it) {
    Vector w = a.adjoint() * (a * v);
    const double norm = w.norm();
    if (norm == 0.0) return 0.0;
    value = std::sqrt(norm);
    v = w / norm;
  }
  return value;
}

inline Matrix random_complex_matrix(std::mt19937_64& rng, int rows, int cols) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      m(r, c) = Complex(dist(rng), dist(rng));
    }
  }
  return m;
}

inline Vector random_complex_vector(std::mt19937_64& rng, int size) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Vector v(size);
  for (int i = 0; i < size; ++i) {
    v(i) = Complex(dist(rng), dist(rng));
  }
  return v;
}

}  // namespace pintlab::oracle
