#include "eqg/homspace.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "eqg/linalg.hpp"

namespace eqg {

std::string_view class_name(MatrixClass c) {
  switch (c) {
    case MatrixClass::OrthogonalIsometry: return "orthogonal-isometry";
    case MatrixClass::MagicIsometry: return "magic-isometry";
    case MatrixClass::CubicIsometry: return "cubic-isometry";
    case MatrixClass::StochasticIsometry: return "stochastic-isometry";
  }
  return "?";
}

std::string format_classes(const std::set<MatrixClass>& classes) {
  if (classes.empty()) return "none";
  std::string out;
  for (MatrixClass c : classes) {
    if (!out.empty()) out += ',';
    out += class_name(c);
  }
  return out;
}

TruncatedMatrix::TruncatedMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries,
                                 Provenance provenance)
    : rows_(rows), cols_(cols), entries_(std::move(entries)), provenance_(provenance) {
  if (rows_ == 0 || cols_ == 0) throw std::invalid_argument("truncated matrix must be nonempty");
  if (rows_ > cols_) throw std::invalid_argument("truncated matrix has more rows than columns");
  if (entries_.size() != rows_ * cols_)
    throw std::invalid_argument("truncated matrix entry count does not match its shape");
}

TruncatedMatrix TruncatedMatrix::from_tsv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<double> entries;
  std::size_t rows = 0, cols = 0;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<double> row;
    std::string cell;
    while (ls >> cell) {
      std::size_t used = 0;
      double v = 0;
      try {
        v = std::stod(cell, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != cell.size()) throw std::invalid_argument("bad matrix entry '" + cell + "'");
      row.push_back(v);
    }
    if (row.empty()) continue;
    if (rows == 0)
      cols = row.size();
    else if (row.size() != cols)
      throw std::invalid_argument("ragged matrix: row " + std::to_string(rows + 1) + " has " +
                                  std::to_string(row.size()) + " entries, expected " +
                                  std::to_string(cols));
    entries.insert(entries.end(), row.begin(), row.end());
    ++rows;
  }
  return TruncatedMatrix(rows, cols, std::move(entries));
}

std::string TruncatedMatrix::to_tsv() const {
  std::string out;
  char buf[32];
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", (*this)(i, j));
      if (j) out += '\t';
      out += buf;
    }
    out += '\n';
  }
  return out;
}

std::set<MatrixClass> classify(const TruncatedMatrix& m, double tol) {
  std::set<MatrixClass> out;
  const std::size_t r = m.rows(), n = m.cols();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t i2 = 0; i2 < r; ++i2) {
      double dot = 0;
      for (std::size_t j = 0; j < n; ++j) dot += m(i, j) * m(i2, j);
      if (std::abs(dot - (i == i2 ? 1.0 : 0.0)) > tol) return out;
    }
  out.insert(MatrixClass::OrthogonalIsometry);

  bool magic = true;
  for (std::size_t i = 0; i < r && magic; ++i)
    for (std::size_t j = 0; j < n && magic; ++j) {
      const double x = m(i, j);
      if (std::abs(x * x - x) > tol) magic = false;
      for (std::size_t i2 = i + 1; i2 < r && magic; ++i2)
        if (std::abs(x * m(i2, j)) > tol) magic = false;
    }
  if (magic) out.insert(MatrixClass::MagicIsometry);

  bool cubic = true;
  for (std::size_t i = 0; i < r && cubic; ++i)
    for (std::size_t j = 0; j < n && cubic; ++j)
      for (std::size_t j2 = j + 1; j2 < n && cubic; ++j2)
        if (std::abs(m(i, j) * m(i, j2)) > tol) cubic = false;
  if (cubic) out.insert(MatrixClass::CubicIsometry);

  bool stochastic = true;
  for (std::size_t i = 0; i < r && stochastic; ++i) {
    double sum = 0;
    for (std::size_t j = 0; j < n; ++j) sum += m(i, j);
    if (std::abs(sum - 1.0) > tol) stochastic = false;
  }
  if (stochastic) out.insert(MatrixClass::StochasticIsometry);
  return out;
}

bool prop52_equivalence(const TruncatedMatrix& m, double tol) {
  const auto c = classify(m, tol);
  const bool magic = c.contains(MatrixClass::MagicIsometry);
  const bool cubic_stochastic =
      c.contains(MatrixClass::CubicIsometry) && c.contains(MatrixClass::StochasticIsometry);
  return magic == cubic_stochastic;
}

MatrixClass defining_class(Category cat) {
  switch (cat) {
    case Category::O:
    case Category::Ofree: return MatrixClass::OrthogonalIsometry;
    case Category::S:
    case Category::Sfree: return MatrixClass::MagicIsometry;
    case Category::H:
    case Category::Hfree: return MatrixClass::CubicIsometry;
    case Category::B:
    case Category::Bfree: return MatrixClass::StochasticIsometry;
    default: break;
  }
  throw std::invalid_argument("no defining matrix class for category " +
                              std::string(category_name(cat)));
}

namespace {

Category free_version(Category cat) {
  switch (cat) {
    case Category::O: return Category::Ofree;
    case Category::S: return Category::Sfree;
    case Category::H: return Category::Hfree;
    case Category::B: return Category::Bfree;
    default: return cat;
  }
}

}  // namespace

bool fixed_point_sum_check(const TruncatedMatrix& m, Category cat, const SetPartition& p,
                           std::span<const int> rows, double tol) {
  const MatrixClass needed = defining_class(cat);
  if (!classify(m, tol).contains(needed))
    throw std::invalid_argument("matrix is not a " + std::string(class_name(needed)) +
                                " as required by category " + std::string(category_name(cat)));
  if (!in_category(free_version(cat), p))
    throw std::invalid_argument("partition " + p.to_string() + " is not in " +
                                std::string(category_name(free_version(cat))));
  if (rows.size() != p.points())
    throw std::invalid_argument("row tuple length does not match the partition");
  for (int i : rows)
    if (i < 1 || static_cast<std::size_t>(i) > m.rows())
      throw std::invalid_argument("row label " + std::to_string(i) + " out of range");

  double total = 1.0;
  for (const auto& block : p.blocks()) {
    double sum = 0;
    for (std::size_t l = 0; l < m.cols(); ++l) {
      double prod = 1.0;
      for (std::size_t point : block) prod *= m(rows[point - 1] - 1, l);
      sum += prod;
    }
    bool constant = true;
    for (std::size_t point : block) constant = constant && rows[point - 1] == rows[block[0] - 1];
    if (std::abs(sum - (constant ? 1.0 : 0.0)) > tol) return false;
    total *= sum;
  }
  return std::abs(total - delta(p, rows)) <= tol;
}

Rational invariant_state_moment(Category cat, int k, const MomentWord& word) {
  if (is_primed(cat))
    throw std::invalid_argument("invariant state needs an unprimed category");
  const int n = word.dimension();
  if (k < 0 || k > n) throw std::out_of_range("cutoff k must lie in 0..n");
  for (const auto& l : word.letters())
    if (l.row <= k)
      throw std::out_of_range("row index " + std::to_string(l.row) +
                              " is not above the cutoff k=" + std::to_string(k));

  const auto order = enumerate_category(cat, word.size());
  const SetPartition row_kernel = kernel(word.row_indices());
  const SetPartition col_kernel = kernel(word.col_indices());
  const QMatrix gram = to_rational(gram_integers(cat, word.size(), n));
  std::vector<Rational> rhs(order.size());
  for (std::size_t a = 0; a < order.size(); ++a) rhs[a] = order[a].refines(col_kernel) ? 1 : 0;
  const auto x = solve(gram, rhs);
  if (!x) throw SingularGram(gram_rank(cat, word.size(), n), order.size());
  Rational value = 0;
  for (std::size_t a = 0; a < order.size(); ++a)
    if (order[a].refines(row_kernel)) value += (*x)[a];
  return value;
}

namespace {

using Truncation = std::vector<std::int8_t>;

std::set<Truncation> truncations(TruncationGroup group, int n, int k, TruncationCaps caps) {
  if (n < 0 || k < 0 || k > n) throw std::invalid_argument("need 0 <= k <= n");
  const int cap = group == TruncationGroup::S ? caps.max_n_s : caps.max_n_h;
  if (n > cap)
    throw std::length_error("n=" + std::to_string(n) + " exceeds the enumeration cap " +
                            std::to_string(cap));
  const std::size_t r = static_cast<std::size_t>(n - k);
  std::set<Truncation> out;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  const unsigned sign_masks = group == TruncationGroup::H ? (1u << n) : 1u;
  do {
    for (unsigned mask = 0; mask < sign_masks; ++mask) {
      Truncation t(r * n, 0);
      for (std::size_t row = 0; row < r; ++row) {
        const int i = k + static_cast<int>(row);
        t[row * n + perm[i]] = ((mask >> i) & 1u) ? -1 : 1;
      }
      out.insert(std::move(t));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

std::uint64_t count_truncations(TruncationGroup group, int n, int k, TruncationCaps caps) {
  return truncations(group, n, k, caps).size();
}

std::vector<TruncatedMatrix> enumerate_truncations(TruncationGroup group, int n, int k,
                                                   TruncationCaps caps) {
  if (k >= n) throw std::invalid_argument("truncation with no rows");
  std::vector<TruncatedMatrix> out;
  const std::size_t r = static_cast<std::size_t>(n - k);
  for (const auto& t : truncations(group, n, k, caps))
    out.emplace_back(r, static_cast<std::size_t>(n), std::vector<double>(t.begin(), t.end()),
                     TruncatedMatrix::Provenance::Enumerated);
  return out;
}

std::vector<double> missing_stochastic_row(const TruncatedMatrix& m) {
  std::vector<double> row(m.cols(), 1.0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) row[j] -= m(i, j);
  return row;
}

namespace {

using Mat2 = std::array<std::array<double, 2>, 2>;

Mat2 mul(const Mat2& a, const Mat2& b) {
  Mat2 c{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return c;
}

Mat2 add(const Mat2& a, const Mat2& b, double sign = 1.0) {
  Mat2 c{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) c[i][j] = a[i][j] + sign * b[i][j];
  return c;
}

// Largest singular value of a 2x2 matrix.
double operator_norm(const Mat2& m) {
  const double fro2 = m[0][0] * m[0][0] + m[0][1] * m[0][1] + m[1][0] * m[1][0] + m[1][1] * m[1][1];
  const double det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  const double disc = std::max(0.0, fro2 * fro2 - 4.0 * det * det);
  return std::sqrt((fro2 + std::sqrt(disc)) / 2.0);
}

}  // namespace

double free_projection_witness(double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  const Mat2 q{{{1.0, 0.0}, {0.0, 0.0}}};
  const Mat2 q_perp{{{0.0, 0.0}, {0.0, 1.0}}};
  const Mat2 p{{{c * c, c * s}, {c * s, s * s}}};
  const Mat2 a = add(mul(mul(q, p), q), mul(mul(q_perp, p), q_perp));
  return operator_norm(add(mul(a, p), mul(p, a), -1.0));
}

}  // namespace eqg
