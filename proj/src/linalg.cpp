#include "qhopf/linalg.hpp"

#include <vector>

#include "qhopf/errors.hpp"

namespace qhopf {

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw InvalidParameter("max_abs_diff: shape mismatch");
  }
  return max_abs(a - b);
}

Matrix swap_matrix(std::size_t dim_a, std::size_t dim_b) {
  const auto da = static_cast<Eigen::Index>(dim_a);
  const auto db = static_cast<Eigen::Index>(dim_b);
  Matrix p = Matrix::Zero(da * db, da * db);
  for (Eigen::Index i = 0; i < da; ++i) {
    for (Eigen::Index j = 0; j < db; ++j) p(i * db + j, j * da + i) = 1.0;
  }
  return p;
}

Matrix embed12(const Matrix& m, std::size_t d1, std::size_t d2, std::size_t d3) {
  if (m.rows() != static_cast<Eigen::Index>(d1 * d2)) throw InvalidParameter("embed12: shape");
  return kron(m, Matrix::Identity(static_cast<Eigen::Index>(d3), static_cast<Eigen::Index>(d3)));
}

Matrix embed23(const Matrix& m, std::size_t d1, std::size_t d2, std::size_t d3) {
  if (m.rows() != static_cast<Eigen::Index>(d2 * d3)) throw InvalidParameter("embed23: shape");
  return kron(Matrix::Identity(static_cast<Eigen::Index>(d1), static_cast<Eigen::Index>(d1)), m);
}

Matrix embed13(const Matrix& m, std::size_t d1, std::size_t d2, std::size_t d3) {
  if (m.rows() != static_cast<Eigen::Index>(d1 * d3)) throw InvalidParameter("embed13: shape");
  const auto n1 = static_cast<Eigen::Index>(d1);
  const auto n2 = static_cast<Eigen::Index>(d2);
  const auto n3 = static_cast<Eigen::Index>(d3);
  Matrix out = Matrix::Zero(n1 * n2 * n3, n1 * n2 * n3);
  for (Eigen::Index i1 = 0; i1 < n1; ++i1)
    for (Eigen::Index i3 = 0; i3 < n3; ++i3)
      for (Eigen::Index k1 = 0; k1 < n1; ++k1)
        for (Eigen::Index k3 = 0; k3 < n3; ++k3) {
          const double v = m(i1 * n3 + i3, k1 * n3 + k3);
          if (v == 0.0) continue;
          for (Eigen::Index i2 = 0; i2 < n2; ++i2) {
            out((i1 * n2 + i2) * n3 + i3, (k1 * n2 + i2) * n3 + k3) = v;
          }
        }
  return out;
}

Matrix direct_sum(const std::vector<Matrix>& blocks) {
  Eigen::Index n = 0;
  for (const auto& b : blocks) n += b.rows();
  Matrix out = Matrix::Zero(n, n);
  Eigen::Index at = 0;
  for (const auto& b : blocks) {
    out.block(at, at, b.rows(), b.cols()) = b;
    at += b.rows();
  }
  return out;
}

}  // namespace qhopf
