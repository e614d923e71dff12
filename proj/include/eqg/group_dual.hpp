#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace eqg {

/// Permutation of {1..d}, stored 0-based. Product a * b applies b first.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::size_t degree);
  /// Cycle notation over 1-based points, e.g. "(1 2)(3 4)"; "()" or "" is the identity.
  static Permutation parse_cycles(std::string_view text, std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator()(std::uint32_t point) const { return images_[point]; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  std::string to_cycles() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

inline constexpr std::size_t kDefaultGroupCap = 1'000'000;

/// A finite permutation group together with the ordered generator list it was built from.
class FiniteGroup {
 public:
  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& generators() const { return generators_; }
  bool contains(const Permutation& p) const { return lookup_.contains(p); }
  /// Elements in sorted order.
  std::vector<Permutation> elements() const;

 private:
  friend FiniteGroup close_generators(std::size_t, std::vector<Permutation>, std::size_t);

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::unordered_set<Permutation, PermutationHash> lookup_;
};

/// Breadth-first closure of the generators under left multiplication.
/// Throws std::invalid_argument on a degree mismatch and std::length_error past cap.
FiniteGroup close_generators(std::size_t degree, std::vector<Permutation> generators,
                             std::size_t cap = kDefaultGroupCap);

/// Smallest normal subgroup of g containing subset (each element must lie in g).
FiniteGroup normal_closure(const FiniteGroup& g, std::span<const Permutation> subset,
                           std::size_t cap = kDefaultGroupCap);

/// h is normal in g: conjugating h's generators by g's generators stays in h.
bool is_normal(const FiniteGroup& g, const FiniteGroup& h);

/// Embedding of a group dual with generator list g_1..g_n, through a unitary J
/// of which only the zero pattern matters, and a cutoff k.
struct DualEmbedding {
  FiniteGroup group;
  std::vector<std::vector<bool>> pattern;  ///< n x n, pattern[i][r] <=> J_{ir} != 0
  int cutoff = 0;

  /// Checks shape, 0 <= k <= n, and that no row or column of the pattern is all zero.
  void validate() const;

  /// Validates J J^t = 1 within tol, then keeps the support |J_ir| > tol.
  static std::vector<std::vector<bool>> pattern_from_matrix(
      const std::vector<std::vector<double>>& j, double tol = 1e-9);
};

struct DualAnalysis {
  std::size_t group_order = 0;
  std::size_t lambda_order = 0;          ///< dim of the row algebra C_x(G/H)
  std::size_t lambda_closure_order = 0;  ///< dim of C(G/H)
  std::size_t theta_order = 0;
  bool isomorphism = false;

  /// "key=value" lines.
  std::string to_key_values() const;
};

DualAnalysis analyze_embedding(const DualEmbedding& e, std::size_t cap = kDefaultGroupCap);

/// Lambda: the subgroup generated by the g_r whose column r of the pattern
/// has a nonzero entry in some row below the cutoff.
FiniteGroup lambda_subgroup(const DualEmbedding& e, std::size_t cap = kDefaultGroupCap);

/// Plain-text embedding description: degree=, k=, generator= (repeated), then
/// pattern= or J= followed by n matrix rows (the first may share the key line).
DualEmbedding parse_embedding(std::string_view text, std::size_t cap = kDefaultGroupCap);

}  // namespace eqg
