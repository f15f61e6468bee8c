#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace qhopf {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Kronecker product with the left factor's index major.
Matrix kron(const Matrix& a, const Matrix& b);

/// Largest absolute entry (Chebyshev norm of the entries).
double max_abs(const Matrix& m);
double max_abs_diff(const Matrix& a, const Matrix& b);

/// Permutation P with P (x_b (x) x_a) = x_a (x) x_b, i.e. it carries
/// V_b (x) V_a onto V_a (x) V_b.
Matrix swap_matrix(std::size_t dim_a, std::size_t dim_b);

/// Operators on pairs of factors of V1 (x) V2 (x) V3, padded with identities.
Matrix embed12(const Matrix& m, std::size_t d1, std::size_t d2, std::size_t d3);
Matrix embed23(const Matrix& m, std::size_t d1, std::size_t d2, std::size_t d3);
Matrix embed13(const Matrix& m, std::size_t d1, std::size_t d2, std::size_t d3);

/// Block-diagonal assembly of the given square blocks.
Matrix direct_sum(const std::vector<Matrix>& blocks);

}  // namespace qhopf
