#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace eqg {

/**
 * A set partition of the points {1,...,s}.
 *
 * Stored as its restricted-growth string: label[t] is the index of the block
 * containing point t+1, blocks numbered in order of their minimum element.
 * This is also the canonical form, so equality and ordering are plain
 * comparisons of the label vectors.
 */
class SetPartition {
 public:
  SetPartition() = default;

  /// Build from explicit blocks over 1-based points. Throws std::invalid_argument
  /// unless the blocks are nonempty, disjoint and cover {1,...,points}.
  static SetPartition from_blocks(std::size_t points,
                                  const std::vector<std::vector<std::size_t>>& blocks);

  /// Build from any labelling of the points (kernel of a tuple); relabels canonically.
  static SetPartition from_labels(std::span<const int> labels);

  /// Parse the block-list notation "{1,3}{2,4}"; "{}" is the empty partition.
  static SetPartition parse(std::string_view text);

  static SetPartition discrete(std::size_t points);
  static SetPartition single_block(std::size_t points);

  std::size_t points() const { return labels_.size(); }
  std::size_t block_count() const { return block_count_; }
  const std::vector<int>& rgs() const { return labels_; }
  int block_of(std::size_t point) const { return labels_[point]; }

  /// Blocks as ascending 1-based point lists, ordered by minimum.
  std::vector<std::vector<std::size_t>> blocks() const;
  std::vector<std::size_t> block_sizes() const;

  /// "{1,3}{2,4}"; the empty partition renders as "{}".
  std::string to_string() const;

  /// True when every block of *this lies inside a block of other.
  bool refines(const SetPartition& other) const;

  friend bool operator==(const SetPartition&, const SetPartition&) = default;
  friend auto operator<=>(const SetPartition& a, const SetPartition& b) {
    return a.labels_ <=> b.labels_;
  }

 private:
  explicit SetPartition(std::vector<int> labels);

  std::vector<int> labels_;
  std::size_t block_count_ = 0;
};

/// The ten categories of partitions: O, S, H, B, their free versions, and the
/// primed S and B categories.
enum class Category { O, S, H, B, Ofree, Sfree, Hfree, Bfree, Sprime, Bprime };

inline constexpr Category kAllCategories[] = {
    Category::O,     Category::S,     Category::H,     Category::B,      Category::Ofree,
    Category::Sfree, Category::Hfree, Category::Bfree, Category::Sprime, Category::Bprime};

inline constexpr Category kUnprimedCategories[] = {
    Category::O,     Category::S,     Category::H,     Category::B,
    Category::Ofree, Category::Sfree, Category::Hfree, Category::Bfree};

inline constexpr Category kFreeCategories[] = {Category::Ofree, Category::Sfree, Category::Hfree,
                                               Category::Bfree};

std::string_view category_name(Category cat);
/// Exact label match ("O", "Sfree", "Bprime", ...); throws std::invalid_argument.
Category parse_category(std::string_view label);

bool is_free(Category cat);
bool is_primed(Category cat);

/// Membership of p in D(p.points()).
bool in_category(Category cat, const SetPartition& p);

bool is_noncrossing(const SetPartition& p);

/// Members of D(s), ordered lexicographically by restricted-growth string.
std::vector<SetPartition> enumerate_category(Category cat, std::size_t s);

/// All partitions of {1..s} in canonical order.
std::vector<SetPartition> enumerate_all(std::size_t s);

struct JoinResult {
  SetPartition partition;
  std::size_t block_count;
};

/// Finest partition coarser than both; throws std::invalid_argument on point-count mismatch.
JoinResult join(const SetPartition& p, const SetPartition& q);

/// 1 iff the index tuple is constant on every block of p.
int delta(const SetPartition& p, std::span<const int> indices);

/// Kernel of an index tuple: positions grouped by equal value.
SetPartition kernel(std::span<const int> indices);

/// The subpartition left after deleting the blocks selected by block_mask
/// (bit b selects block b), relabelled order-preservingly.
SetPartition remove_blocks(const SetPartition& p, unsigned long long block_mask);

std::set<SetPartition> block_removal_subpartitions(const SetPartition& p);

struct StabilityWitness {
  SetPartition partition;
  std::vector<std::vector<std::size_t>> removed_blocks;
  SetPartition subpartition;
};

struct StabilityResult {
  bool stable = true;
  std::optional<StabilityWitness> witness;
};

/// Checks closure of D under block removal for every s <= s_max. The witness
/// is the first failure in (s, canonical partition, block subset) order.
StabilityResult is_block_stable(Category cat, std::size_t s_max);

}  // namespace eqg
