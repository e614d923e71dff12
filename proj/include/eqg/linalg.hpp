#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "eqg/rational.hpp"

namespace eqg {

/// Row-major dense matrix.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = DenseMatrix<Integer>;
using QMatrix = DenseMatrix<Rational>;

QMatrix to_rational(const IntMatrix& m);
QMatrix multiply(const QMatrix& a, const QMatrix& b);

struct EchelonInfo {
  std::size_t rank = 0;
  /// Columns holding a pivot, ascending. For a Gram matrix these index a
  /// maximal linearly independent subset of the underlying vectors.
  std::vector<std::size_t> pivot_columns;
};

/// Fraction-free (Bareiss) forward elimination; integer arithmetic throughout.
EchelonInfo echelon(const IntMatrix& m);

/// Exact inverse of a square integer matrix by fraction-free Gauss-Jordan
/// elimination on [A | I]; nullopt when A is singular.
std::optional<QMatrix> invert(const IntMatrix& a);

/// Restriction of a matrix to the rows and columns listed in index.
IntMatrix principal_submatrix(const IntMatrix& a, std::span<const std::size_t> index);

/// One solution of A x = b by rational row reduction, free variables set to
/// zero; nullopt when the system is inconsistent.
std::optional<std::vector<Rational>> solve(const QMatrix& a, std::span<const Rational> b);

}  // namespace eqg
