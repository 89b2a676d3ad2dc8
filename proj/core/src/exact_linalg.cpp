#include "singlattice/exact_linalg.hpp"

#include <utility>

#include "singlattice/errors.hpp"

namespace singlattice {

std::vector<Integer> leading_principal_minors(const Matrix<Integer>& input) {
  const std::size_t n = input.size();
  Matrix<Integer> a = input;
  std::vector<Integer> minors;
  minors.reserve(n);
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    minors.push_back(a[k][k]);
    if (a[k][k] == 0) break;
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Sylvester's identity makes this division exact.
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return minors;
}

std::vector<Rational> solve_exact(Matrix<Rational> a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw PreconditionError("solve_exact: dimension mismatch");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw PreconditionError("solve_exact: singular matrix");
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const Rational factor = a[row][col] / a[col][col];
      for (std::size_t j = col; j < n; ++j) a[row][j] -= factor * a[col][j];
      b[row] -= factor * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

Matrix<Rational> inverse_exact(const Matrix<Rational>& a) {
  const std::size_t n = a.size();
  Matrix<Rational> inv(n, std::vector<Rational>(n));
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> e(n);
    e[j] = 1;
    const auto col = solve_exact(a, e);
    for (std::size_t i = 0; i < n; ++i) inv[i][j] = col[i];
  }
  return inv;
}

LdlFactor ldl_decompose(const Matrix<Rational>& a) {
  const std::size_t n = a.size();
  LdlFactor f;
  f.lower.assign(n, std::vector<Rational>(n));
  f.diag.assign(n, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    Rational d = a[j][j];
    for (std::size_t k = 0; k < j; ++k) d -= f.lower[j][k] * f.lower[j][k] * f.diag[k];
    if (d <= 0) throw PreconditionError("ldl_decompose: matrix is not positive definite");
    f.diag[j] = d;
    f.lower[j][j] = 1;
    for (std::size_t i = j + 1; i < n; ++i) {
      if (a[i][j] != a[j][i]) throw PreconditionError("ldl_decompose: matrix is not symmetric");
      Rational s = a[i][j];
      for (std::size_t k = 0; k < j; ++k) s -= f.lower[i][k] * f.lower[j][k] * f.diag[k];
      f.lower[i][j] = s / d;
    }
  }
  return f;
}

}  // namespace singlattice
