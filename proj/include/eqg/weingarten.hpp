#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "eqg/linalg.hpp"
#include "eqg/partition.hpp"
#include "eqg/rational.hpp"

namespace eqg {

/// One generator u_{row,col}, 1-based.
struct Letter {
  int row = 0;
  int col = 0;
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A monomial u_{i1 j1} ... u_{is js} in the coordinates of an n x n matrix.
class MomentWord {
 public:
  /// Throws std::out_of_range if an index falls outside 1..dimension.
  MomentWord(std::vector<Letter> letters, int dimension);

  const std::vector<Letter>& letters() const { return letters_; }
  int dimension() const { return dimension_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  std::vector<int> row_indices() const;
  std::vector<int> col_indices() const;

  /// "1,1 2,2"
  std::string to_string() const;

 private:
  std::vector<Letter> letters_;
  int dimension_;
};

/// Square rational matrix whose rows and columns are labelled by partitions.
struct RationalMatrix {
  std::vector<SetPartition> order;
  QMatrix entries;

  std::size_t size() const { return order.size(); }
  const Rational& at(std::size_t i, std::size_t j) const { return entries(i, j); }

  /// Header row "partition" + labels, then one labelled row per partition.
  std::string to_tsv() const;
};

class SingularGram : public std::runtime_error {
 public:
  SingularGram(std::size_t rank, std::size_t order);
  std::size_t rank() const { return rank_; }
  std::size_t order() const { return order_; }

 private:
  std::size_t rank_;
  std::size_t order_;
};

/// Integer Gram matrix n^{|p v q|} over enumerate_category(cat, s).
IntMatrix gram_integers(Category cat, std::size_t s, int n);

RationalMatrix gram_matrix(Category cat, std::size_t s, int n);
std::size_t gram_rank(Category cat, std::size_t s, int n);

/// Exact inverse of the Gram matrix; throws SingularGram when it has none.
RationalMatrix weingarten_matrix(Category cat, std::size_t s, int n);

/// Haar state on the word, by the Weingarten formula. When the Gram matrix is
/// singular the double sum runs over a maximal independent set of partitions
/// (first pivots in canonical order) with the inverse of the restricted Gram
/// matrix, which is the same orthogonal projection onto the fixed-point space.
Rational haar_moment(Category cat, const MomentWord& word);

/// Moment of the character sum_i u_ii, computed as trace(W G).
Rational character_moment(Category cat, int n, std::size_t s);

/// Cached Weingarten data for one (category, s, n).
struct WeingartenKernel {
  std::vector<SetPartition> order;
  std::size_t rank = 0;
  std::vector<std::size_t> basis;  ///< indices into order
  QMatrix basis_inverse;           ///< inverse of the Gram matrix restricted to basis

  bool invertible() const { return rank == order.size(); }
};

/// Shared, thread-safe; computed once per key.
std::shared_ptr<const WeingartenKernel> weingarten_kernel(Category cat, std::size_t s, int n);

void clear_weingarten_cache();
std::size_t weingarten_cache_size();

}  // namespace eqg
