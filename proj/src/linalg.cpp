#include "eqg/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace eqg {

QMatrix to_rational(const IntMatrix& m) {
  QMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

QMatrix multiply(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch in multiply");
  QMatrix out(a.rows(), b.cols());
  Rational acc;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      acc = 0;
      for (std::size_t l = 0; l < a.cols(); ++l) acc += a(i, l) * b(l, j);
      out(i, j) = acc;
    }
  return out;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

}  // namespace

EchelonInfo echelon(const IntMatrix& input) {
  IntMatrix m = input;
  EchelonInfo info;
  Integer prev = 1;
  Integer t;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    swap_rows(m, row, pivot);
    for (std::size_t i = row + 1; i < m.rows(); ++i) {
      for (std::size_t j = col + 1; j < m.cols(); ++j) {
        t = m(row, col) * m(i, j) - m(i, col) * m(row, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, col) = 0;
    }
    prev = m(row, col);
    info.pivot_columns.push_back(col);
    ++row;
  }
  info.rank = row;
  return info;
}

std::optional<QMatrix> invert(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("invert: matrix is not square");
  const std::size_t n = a.rows();
  const std::size_t w = 2 * n;
  IntMatrix m(n, w);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = a(i, j);
    m(i, n + i) = 1;
  }
  Integer prev = 1;
  Integer t;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m(pivot, k) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    swap_rows(m, k, pivot);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      for (std::size_t j = 0; j < w; ++j) {
        if (j == k) continue;
        t = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  // Left block is now prev * I; the right block is the matching multiple of A^{-1}.
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      inv(i, j) = Rational(m(i, n + j), prev);
      inv(i, j).canonicalize();
    }
  return inv;
}

IntMatrix principal_submatrix(const IntMatrix& a, std::span<const std::size_t> index) {
  IntMatrix out(index.size(), index.size());
  for (std::size_t i = 0; i < index.size(); ++i)
    for (std::size_t j = 0; j < index.size(); ++j) out(i, j) = a(index[i], index[j]);
  return out;
}

std::optional<std::vector<Rational>> solve(const QMatrix& a, std::span<const Rational> b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: right-hand side length mismatch");
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  QMatrix m(rows, cols + 1);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = a(i, j);
    m(i, cols) = b[i];
  }
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  Rational factor;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t p = row;
    while (p < rows && m(p, col) == 0) ++p;
    if (p == rows) continue;
    if (p != row)
      for (std::size_t j = 0; j <= cols; ++j) std::swap(m(p, j), m(row, j));
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || m(i, col) == 0) continue;
      factor = m(i, col) / m(row, col);
      for (std::size_t j = col; j <= cols; ++j) m(i, j) -= factor * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < rows; ++i)
    if (m(i, cols) != 0) return std::nullopt;
  std::vector<Rational> x(cols, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    x[pivots[r]] = m(r, cols) / m(r, pivots[r]);
    x[pivots[r]].canonicalize();
  }
  return x;
}

}  // namespace eqg
