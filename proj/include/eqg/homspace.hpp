#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eqg/partition.hpp"
#include "eqg/rational.hpp"
#include "eqg/weingarten.hpp"

namespace eqg {

inline constexpr double kDefaultTolerance = 1e-9;

enum class MatrixClass { OrthogonalIsometry, MagicIsometry, CubicIsometry, StochasticIsometry };

std::string_view class_name(MatrixClass c);

/// Comma-separated class list in enum order, or "none".
std::string format_classes(const std::set<MatrixClass>& classes);

/// The r x n matrix of row-algebra generators p_{ij}, i > k, evaluated in a
/// commuting numeric model. Rows are labelled 1..r.
class TruncatedMatrix {
 public:
  enum class Provenance { Enumerated, UserSupplied };

  /// Throws std::invalid_argument unless 0 < rows <= cols and entries has rows*cols values.
  TruncatedMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries,
                  Provenance provenance = Provenance::UserSupplied);

  /// Whitespace/tab separated decimals, one matrix row per line; blank lines ignored.
  static TruncatedMatrix from_tsv(std::string_view text);
  std::string to_tsv() const;

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Provenance provenance() const { return provenance_; }
  double operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> entries_;
  Provenance provenance_;
};

std::set<MatrixClass> classify(const TruncatedMatrix& m, double tol = kDefaultTolerance);

/// magic <=> (cubic and stochastic), evaluated on m.
bool prop52_equivalence(const TruncatedMatrix& m, double tol = kDefaultTolerance);

/// The matrix class whose relations define the row algebra of a free category
/// (O: orthogonal, S: magic, H: cubic, B: stochastic). Classical labels map
/// to the same class as their free version.
MatrixClass defining_class(Category cat);

/**
 * Checks the fixed-point sum identity: summing p_{i_1 l_1} ... p_{i_s l_s}
 * over column tuples l constant on the blocks of p gives delta(p, i).
 *
 * Each block is checked separately (common column index within a block)
 * and the product over blocks is compared with delta(p, i). `rows` holds
 * 1-based row labels of m.
 *
 * Throws std::invalid_argument if m does not carry the defining class of
 * cat, if p is not in the free version of cat, or if a row label is out of range.
 */
bool fixed_point_sum_check(const TruncatedMatrix& m, Category cat, const SetPartition& p,
                           std::span<const int> rows, double tol = kDefaultTolerance);

/// Invariant state on the row algebra evaluated on a word in the p_{ij}
/// (every row index > k). Solves G x = delta_col and pairs x with delta_row,
/// using kernel refinement for the delta vectors; no Weingarten matrix is formed.
Rational invariant_state_moment(Category cat, int k, const MomentWord& word);

enum class TruncationGroup { S, H };

struct TruncationCaps {
  int max_n_s = 8;
  int max_n_h = 5;
};

/// Distinct bottom-(n-k)-row truncations of permutation (S) or signed
/// permutation (H) matrices. Throws std::length_error above the cap.
std::uint64_t count_truncations(TruncationGroup group, int n, int k, TruncationCaps caps = {});

/// The truncations themselves, in sorted order; requires k < n.
std::vector<TruncatedMatrix> enumerate_truncations(TruncationGroup group, int n, int k,
                                                   TruncationCaps caps = {});

/// For a stochastic isometry with r = n-1 rows: the row 1 - sum_i m_{ij}
/// that completes it to a square matrix.
std::vector<double> missing_stochastic_row(const TruncatedMatrix& m);

/// Operator norm of [q p' q + q' p' q', p'] for q = projection on the first
/// axis of the plane, q' = 1 - q, p' = projection on (cos theta, sin theta).
double free_projection_witness(double theta);

}  // namespace eqg
