#pragma once

#include <vector>

#include "singlattice/arith.hpp"

namespace singlattice {

template <class T>
using Matrix = std::vector<std::vector<T>>;

/// Leading principal minors det(A[0..k, 0..k]) for k = 1..n, computed by
/// fraction-free (Bareiss) elimination without pivoting. The k-th Bareiss
/// pivot is exactly the k-th leading minor, so elimination cannot continue
/// past a vanishing minor: the result then ends with that zero and is
/// shorter than n.
std::vector<Integer> leading_principal_minors(const Matrix<Integer>& a);

/// Solves A x = b exactly. Throws PreconditionError if A is singular.
std::vector<Rational> solve_exact(Matrix<Rational> a, std::vector<Rational> b);

Matrix<Rational> inverse_exact(const Matrix<Rational>& a);

/// A = L diag(d) L^T with L unit lower triangular.
struct LdlFactor {
  Matrix<Rational> lower;
  std::vector<Rational> diag;
};

/// Throws PreconditionError unless `a` is symmetric positive definite.
LdlFactor ldl_decompose(const Matrix<Rational>& a);

}  // namespace singlattice
