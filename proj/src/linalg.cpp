#include "pintlab/linalg.hpp"

namespace pintlab {

Matrix matrix_power(const Matrix& m, long power) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("matrix_power: matrix must be square");
  }
  if (power < 0) {
    throw std::invalid_argument("matrix_power: negative power");
  }
  Matrix result = Matrix::Identity(m.rows(), m.cols());
  Matrix base = m;
  long k = power;
  while (k > 0) {
    if (k & 1) {
      result = result * base;
    }
    k >>= 1;
    if (k > 0) {
      base = base * base;
    }
  }
  return result;
}

RealVector singular_values(const Matrix& m) {
  // Jacobi is more accurate for small problems; divide-and-conquer wins
  // once matrices get into the hundreds.
  if (std::max(m.rows(), m.cols()) >= 128) {
    Eigen::BDCSVD<Matrix> svd(m);
    return svd.singularValues();
  }
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues();
}

double norm2(const Matrix& m) {
  if (m.size() == 0) {
    return 0.0;
  }
  return singular_values(m)(0);
}

double norm_inf(const Matrix& m) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    worst = std::max(worst, m.row(i).cwiseAbs().sum());
  }
  return worst;
}

int numerical_rank(const Matrix& m, double rel_tol) {
  const RealVector sigma = singular_values(m);
  if (sigma.size() == 0 || sigma(0) == 0.0) {
    return 0;
  }
  const double cutoff = rel_tol * sigma(0);
  int rank = 0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    if (sigma(i) > cutoff) {
      ++rank;
    }
  }
  return rank;
}

}  // namespace pintlab
