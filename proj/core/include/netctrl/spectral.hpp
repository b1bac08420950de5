#pragma once

#include <vector>

#include "netctrl/matrix.hpp"

namespace netctrl {

/// Eigendecomposition of a symmetric matrix: m = V diag(lambda) V^T with
/// eigenvalues sorted descending by value and orthonormal eigenvector columns.
struct SymmetricEigen {
  std::vector<double> eigenvalues;
  Matrix eigenvectors;
};

/// Cyclic Jacobi rotations. Input must be square and symmetric within
/// 1e-12 per entry; throws std::invalid_argument otherwise and
/// std::runtime_error if the sweep budget is exhausted.
SymmetricEigen sym_eigen(const Matrix& m);

/// Largest singular value, via power iteration on m^T m starting from the
/// normalized all-ones vector. Falls back once to a fixed pseudorandom
/// start if the structured start stagnates. Zero matrix returns 0.
double spectral_norm(const Matrix& m);

/// sum_{k=0}^{K} coeffs[k] * s^k, Horner evaluation (K matrix products).
Matrix matrix_polynomial(const Matrix& s, const std::vector<double>& coeffs);

/// Sum over columns of Euclidean column norms.
double norm_21(const Matrix& m);

enum class PermuteMode { Rows, Both };

/// Rows: out(i, j) = m(perm[i], j), i.e. P m with P(i, perm[i]) = 1.
/// Both: out(i, j) = m(perm[i], perm[j]), i.e. P m P^T (square m only).
/// perm must be a bijection on row indices.
Matrix apply_permutation(const Matrix& m, const std::vector<std::size_t>& perm,
                         PermuteMode mode);

}  // namespace netctrl
