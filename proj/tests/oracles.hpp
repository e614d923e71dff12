#pragma once

// Brute-force reference computations used only by the test suites. Nothing
// here calls into the library's algorithms beyond plain data types.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "eqg/group_dual.hpp"
#include "eqg/rational.hpp"

namespace eqg::testing {

inline Rational frac(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// All set partitions of {0..s-1} as block lists, by recursive insertion of
/// the last point into an existing block or a new one.
inline std::vector<std::vector<std::vector<int>>> bell_partitions(int s) {
  if (s == 0) return {{}};
  std::vector<std::vector<std::vector<int>>> out;
  for (const auto& p : bell_partitions(s - 1)) {
    for (std::size_t b = 0; b < p.size(); ++b) {
      auto q = p;
      q[b].push_back(s - 1);
      out.push_back(q);
    }
    auto q = p;
    q.push_back({s - 1});
    out.push_back(q);
  }
  return out;
}

/// All perfect matchings of {0..s-1}: pair the first free point with each other one.
inline std::vector<std::vector<std::pair<int, int>>> pairings(std::vector<int> points) {
  if (points.empty()) return {{}};
  std::vector<std::vector<std::pair<int, int>>> out;
  if (points.size() % 2) return out;
  const int a = points.front();
  for (std::size_t i = 1; i < points.size(); ++i) {
    std::vector<int> rest;
    for (std::size_t j = 1; j < points.size(); ++j)
      if (j != i) rest.push_back(points[j]);
    for (auto m : pairings(rest)) {
      m.insert(m.begin(), {a, points[i]});
      out.push_back(m);
    }
  }
  return out;
}

/// O(s^4) crossing test on a label vector.
inline bool crosses(const std::vector<int>& label) {
  const std::size_t s = label.size();
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t b = a + 1; b < s; ++b)
      for (std::size_t c = b + 1; c < s; ++c)
        for (std::size_t d = c + 1; d < s; ++d)
          if (label[a] == label[c] && label[b] == label[d] && label[a] != label[b]) return true;
  return false;
}

inline std::uint64_t double_factorial_odd(int s) {  // (s-1)!! for even s
  std::uint64_t r = 1;
  for (int k = s - 1; k > 1; k -= 2) r *= k;
  return r;
}

inline std::uint64_t catalan(int m) {
  std::uint64_t c = 1;
  for (int i = 0; i < m; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

inline std::uint64_t factorial(int n) {
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

/// Every tuple in {1..n}^s, lexicographic.
inline std::vector<std::vector<int>> all_tuples(int n, int s) {
  std::vector<std::vector<int>> out;
  std::vector<int> t(s, 1);
  while (true) {
    out.push_back(t);
    int pos = s - 1;
    while (pos >= 0 && t[pos] == n) t[pos--] = 1;
    if (pos < 0) break;
    ++t[pos];
  }
  return out;
}

/// Rank over Q of a small integer matrix by plain rational elimination.
inline std::size_t rational_rank(std::vector<std::vector<Rational>> m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const Rational f = m[r][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

/// Kernel of the quotient map g -> g / <<subset>> by congruence closure on the
/// element set: start from s ~ 1 and force x ~ y => ax ~ ay and xa ~ ya for
/// every generator a. Returns the class of the identity.
inline std::set<Permutation> quotient_kernel(const FiniteGroup& g,
                                             const std::vector<Permutation>& subset) {
  const auto elems = g.elements();
  std::map<Permutation, std::size_t> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = i;
  std::vector<std::size_t> parent(elems.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  };
  const std::size_t id = index.at(Permutation::identity(g.degree()));
  for (const auto& s : subset) unite(id, index.at(s));
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t x = 0; x < elems.size(); ++x) {
      const std::size_t r = find(x);
      if (r == x) continue;
      for (const auto& a : g.generators()) {
        changed |= unite(index.at(a * elems[x]), index.at(a * elems[r]));
        changed |= unite(index.at(elems[x] * a), index.at(elems[r] * a));
      }
    }
  }
  std::set<Permutation> kernel;
  for (std::size_t x = 0; x < elems.size(); ++x)
    if (find(x) == find(id)) kernel.insert(elems[x]);
  return kernel;
}

inline Permutation random_permutation(std::size_t degree, std::mt19937_64& rng) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(std::move(images));
}

}  // namespace eqg::testing
