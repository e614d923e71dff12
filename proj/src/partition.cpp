#include "eqg/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace eqg {

namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }

  std::vector<std::size_t> parent;
};

void enumerate_rgs(std::vector<int>& labels, std::size_t pos, int max_label,
                   std::vector<SetPartition>& out) {
  if (pos == labels.size()) {
    out.push_back(SetPartition::from_labels(labels));
    return;
  }
  for (int b = 0; b <= max_label + 1; ++b) {
    labels[pos] = b;
    enumerate_rgs(labels, pos + 1, std::max(max_label, b), out);
  }
}

bool sizes_match(Category cat, const SetPartition& p) {
  const auto sizes = p.block_sizes();
  auto all = [&](auto pred) { return std::all_of(sizes.begin(), sizes.end(), pred); };
  switch (cat) {
    case Category::O:
    case Category::Ofree:
      return all([](std::size_t n) { return n == 2; });
    case Category::S:
    case Category::Sfree:
    case Category::Sprime:
      return true;
    case Category::H:
    case Category::Hfree:
      return all([](std::size_t n) { return n % 2 == 0; });
    case Category::B:
    case Category::Bfree:
    case Category::Bprime:
      return all([](std::size_t n) { return n == 1 || n == 2; });
  }
  return false;
}

}  // namespace

SetPartition::SetPartition(std::vector<int> labels) : labels_(std::move(labels)) {
  int top = -1;
  for (int l : labels_) top = std::max(top, l);
  block_count_ = static_cast<std::size_t>(top + 1);
}

SetPartition SetPartition::from_labels(std::span<const int> labels) {
  std::vector<int> canon(labels.size());
  std::vector<std::pair<int, int>> seen;
  for (std::size_t t = 0; t < labels.size(); ++t) {
    auto it = std::find_if(seen.begin(), seen.end(),
                           [&](const auto& e) { return e.first == labels[t]; });
    if (it == seen.end()) {
      seen.emplace_back(labels[t], static_cast<int>(seen.size()));
      canon[t] = seen.back().second;
    } else {
      canon[t] = it->second;
    }
  }
  return SetPartition(std::move(canon));
}

SetPartition SetPartition::from_blocks(std::size_t points,
                                       const std::vector<std::vector<std::size_t>>& blocks) {
  std::vector<int> labels(points, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw std::invalid_argument("partition has an empty block");
    for (std::size_t x : blocks[b]) {
      if (x < 1 || x > points)
        throw std::invalid_argument("point " + std::to_string(x) + " outside 1.." +
                                    std::to_string(points));
      if (labels[x - 1] != -1)
        throw std::invalid_argument("point " + std::to_string(x) + " in two blocks");
      labels[x - 1] = static_cast<int>(b);
    }
  }
  for (std::size_t t = 0; t < points; ++t)
    if (labels[t] == -1)
      throw std::invalid_argument("point " + std::to_string(t + 1) + " not covered");
  return from_labels(labels);
}

SetPartition SetPartition::parse(std::string_view text) {
  std::vector<std::vector<std::size_t>> blocks;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  skip_ws();
  if (text.substr(pos) == "{}") return SetPartition();
  std::size_t max_point = 0;
  while (pos < text.size()) {
    if (text[pos] != '{') throw std::invalid_argument("expected '{' in partition text");
    ++pos;
    std::vector<std::size_t> block;
    while (true) {
      skip_ws();
      std::size_t start = pos;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
      if (start == pos) throw std::invalid_argument("expected a point number in partition text");
      block.push_back(std::stoul(std::string(text.substr(start, pos - start))));
      max_point = std::max(max_point, block.back());
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == '}') {
        ++pos;
        break;
      }
      throw std::invalid_argument("unterminated block in partition text");
    }
    blocks.push_back(std::move(block));
    skip_ws();
  }
  return from_blocks(max_point, blocks);
}

SetPartition SetPartition::discrete(std::size_t points) {
  std::vector<int> labels(points);
  std::iota(labels.begin(), labels.end(), 0);
  return SetPartition(std::move(labels));
}

SetPartition SetPartition::single_block(std::size_t points) {
  return SetPartition(std::vector<int>(points, 0));
}

std::vector<std::vector<std::size_t>> SetPartition::blocks() const {
  std::vector<std::vector<std::size_t>> out(block_count_);
  for (std::size_t t = 0; t < labels_.size(); ++t) out[labels_[t]].push_back(t + 1);
  return out;
}

std::vector<std::size_t> SetPartition::block_sizes() const {
  std::vector<std::size_t> sizes(block_count_, 0);
  for (int l : labels_) ++sizes[l];
  return sizes;
}

std::string SetPartition::to_string() const {
  if (labels_.empty()) return "{}";
  std::string out;
  for (const auto& block : blocks()) {
    out += '{';
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(block[i]);
    }
    out += '}';
  }
  return out;
}

bool SetPartition::refines(const SetPartition& other) const {
  if (other.points() != points()) return false;
  std::vector<int> image(block_count_, -1);
  for (std::size_t t = 0; t < labels_.size(); ++t) {
    int& target = image[labels_[t]];
    if (target == -1)
      target = other.labels_[t];
    else if (target != other.labels_[t])
      return false;
  }
  return true;
}

std::string_view category_name(Category cat) {
  switch (cat) {
    case Category::O: return "O";
    case Category::S: return "S";
    case Category::H: return "H";
    case Category::B: return "B";
    case Category::Ofree: return "Ofree";
    case Category::Sfree: return "Sfree";
    case Category::Hfree: return "Hfree";
    case Category::Bfree: return "Bfree";
    case Category::Sprime: return "Sprime";
    case Category::Bprime: return "Bprime";
  }
  return "?";
}

Category parse_category(std::string_view label) {
  for (Category cat : kAllCategories)
    if (category_name(cat) == label) return cat;
  throw std::invalid_argument("unknown category '" + std::string(label) + "'");
}

bool is_free(Category cat) {
  return cat == Category::Ofree || cat == Category::Sfree || cat == Category::Hfree ||
         cat == Category::Bfree;
}

bool is_primed(Category cat) { return cat == Category::Sprime || cat == Category::Bprime; }

bool is_noncrossing(const SetPartition& p) {
  const auto& labels = p.rgs();
  std::vector<std::size_t> last(p.block_count(), 0);
  for (std::size_t t = 0; t < labels.size(); ++t) last[labels[t]] = t;
  std::vector<bool> seen(p.block_count(), false);
  std::vector<int> open;
  for (std::size_t t = 0; t < labels.size(); ++t) {
    const int b = labels[t];
    if (seen[b]) {
      if (open.empty() || open.back() != b) return false;
      if (last[b] == t) open.pop_back();
    } else {
      seen[b] = true;
      if (last[b] != t) open.push_back(b);
    }
  }
  return true;
}

bool in_category(Category cat, const SetPartition& p) {
  if (is_primed(cat) && p.points() % 2 == 1) return false;
  if (!sizes_match(cat, p)) return false;
  return !is_free(cat) || is_noncrossing(p);
}

std::vector<SetPartition> enumerate_all(std::size_t s) {
  std::vector<SetPartition> out;
  if (s == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<int> labels(s, 0);
  enumerate_rgs(labels, 1, 0, out);
  return out;
}

std::vector<SetPartition> enumerate_category(Category cat, std::size_t s) {
  std::vector<SetPartition> out;
  if (is_primed(cat) && s % 2 == 1) return out;
  for (auto& p : enumerate_all(s))
    if (in_category(cat, p)) out.push_back(std::move(p));
  return out;
}

JoinResult join(const SetPartition& p, const SetPartition& q) {
  if (p.points() != q.points())
    throw std::invalid_argument("join of partitions on " + std::to_string(p.points()) + " and " +
                                std::to_string(q.points()) + " points");
  const std::size_t s = p.points();
  UnionFind uf(s);
  for (const SetPartition* part : {&p, &q}) {
    std::vector<std::size_t> first(part->block_count(), s);
    for (std::size_t t = 0; t < s; ++t) {
      auto& f = first[part->block_of(t)];
      if (f == s)
        f = t;
      else
        uf.unite(f, t);
    }
  }
  std::vector<int> roots(s);
  for (std::size_t t = 0; t < s; ++t) roots[t] = static_cast<int>(uf.find(t));
  auto joined = SetPartition::from_labels(roots);
  const std::size_t count = joined.block_count();
  return {std::move(joined), count};
}

int delta(const SetPartition& p, std::span<const int> indices) {
  if (indices.size() != p.points())
    throw std::invalid_argument("index tuple of length " + std::to_string(indices.size()) +
                                " for a partition on " + std::to_string(p.points()) + " points");
  std::vector<int> value(p.block_count(), 0);
  std::vector<bool> set(p.block_count(), false);
  for (std::size_t t = 0; t < indices.size(); ++t) {
    const int b = p.block_of(t);
    if (!set[b]) {
      set[b] = true;
      value[b] = indices[t];
    } else if (value[b] != indices[t]) {
      return 0;
    }
  }
  return 1;
}

SetPartition kernel(std::span<const int> indices) { return SetPartition::from_labels(indices); }

SetPartition remove_blocks(const SetPartition& p, unsigned long long block_mask) {
  std::vector<int> kept;
  for (int l : p.rgs())
    if (!((block_mask >> l) & 1ULL)) kept.push_back(l);
  return SetPartition::from_labels(kept);
}

std::set<SetPartition> block_removal_subpartitions(const SetPartition& p) {
  if (p.block_count() >= 64) throw std::invalid_argument("too many blocks for subset enumeration");
  std::set<SetPartition> out;
  const unsigned long long subsets = 1ULL << p.block_count();
  for (unsigned long long mask = 0; mask < subsets; ++mask) out.insert(remove_blocks(p, mask));
  return out;
}

StabilityResult is_block_stable(Category cat, std::size_t s_max) {
  for (std::size_t s = 0; s <= s_max; ++s) {
    for (const auto& p : enumerate_category(cat, s)) {
      const auto blocks = p.blocks();
      const unsigned long long subsets = 1ULL << p.block_count();
      for (unsigned long long mask = 0; mask < subsets; ++mask) {
        auto sub = remove_blocks(p, mask);
        if (in_category(cat, sub)) continue;
        StabilityWitness w{p, {}, std::move(sub)};
        for (std::size_t b = 0; b < blocks.size(); ++b)
          if ((mask >> b) & 1ULL) w.removed_blocks.push_back(blocks[b]);
        return {false, std::move(w)};
      }
    }
  }
  return {};
}

}  // namespace eqg
