#include "eqg/group_dual.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace eqg {

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || hit[x]) throw std::invalid_argument("not a permutation");
    hit[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  return Permutation(std::move(images));
}

Permutation Permutation::parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  std::vector<bool> used(degree, false);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') throw std::invalid_argument("expected '(' in cycle notation");
    ++pos;
    std::vector<std::uint32_t> cycle;
    while (true) {
      skip_ws();
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) throw std::invalid_argument("expected a point in cycle notation");
      const unsigned long point = std::stoul(std::string(text.substr(start, pos - start)));
      if (point < 1 || point > degree)
        throw std::invalid_argument("cycle point " + std::to_string(point) + " outside 1.." +
                                    std::to_string(degree));
      if (used[point - 1])
        throw std::invalid_argument("point " + std::to_string(point) + " repeated in cycles");
      used[point - 1] = true;
      cycle.push_back(static_cast<std::uint32_t>(point - 1));
      skip_ws();
      if (pos < text.size() && text[pos] == ',') ++pos;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    skip_ws();
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<std::uint32_t>(i);
  return Permutation(std::move(inv));
}

std::string Permutation::to_cycles() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    out += '(';
    for (std::size_t x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      if (x != start) out += ' ';
      out += std::to_string(x + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("permutation degree mismatch");
  std::vector<std::uint32_t> images(a.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = a.images_[b.images_[i]];
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto x : p.images()) h = (h ^ x) * 0x100000001b3ULL;
  return h;
}

std::vector<Permutation> FiniteGroup::elements() const {
  auto out = elements_;
  std::sort(out.begin(), out.end());
  return out;
}

FiniteGroup close_generators(std::size_t degree, std::vector<Permutation> generators,
                             std::size_t cap) {
  if (cap == 0) throw std::invalid_argument("group cap must be positive");
  for (const auto& g : generators)
    if (g.degree() != degree)
      throw std::invalid_argument("generator " + g.to_cycles() + " has degree " +
                                  std::to_string(g.degree()) + ", expected " +
                                  std::to_string(degree));
  FiniteGroup out;
  out.degree_ = degree;
  out.generators_ = std::move(generators);
  const Permutation id = Permutation::identity(degree);
  out.lookup_.insert(id);
  out.elements_.push_back(id);
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const Permutation x = out.elements_[queue.front()];
    queue.pop_front();
    for (const auto& g : out.generators_) {
      Permutation y = g * x;
      if (out.lookup_.insert(y).second) {
        if (out.elements_.size() >= cap)
          throw std::length_error("group order exceeds cap " + std::to_string(cap));
        out.elements_.push_back(std::move(y));
        queue.push_back(out.elements_.size() - 1);
      }
    }
  }
  return out;
}

bool is_normal(const FiniteGroup& g, const FiniteGroup& h) {
  for (const auto& x : g.generators()) {
    const Permutation x_inv = x.inverse();
    for (const auto& y : h.generators())
      if (!h.contains(x * y * x_inv)) return false;
  }
  return true;
}

FiniteGroup normal_closure(const FiniteGroup& g, std::span<const Permutation> subset,
                           std::size_t cap) {
  std::vector<Permutation> gens;
  for (const auto& s : subset) {
    if (!g.contains(s))
      throw std::invalid_argument("element " + s.to_cycles() + " is not in the group");
    if (!s.is_identity()) gens.push_back(s);
  }
  FiniteGroup h = close_generators(g.degree(), gens, cap);
  bool grown = true;
  while (grown) {
    grown = false;
    for (const auto& x : g.generators()) {
      const Permutation x_inv = x.inverse();
      for (std::size_t i = 0; i < gens.size(); ++i) {
        Permutation c = x * gens[i] * x_inv;
        if (!h.contains(c)) {
          gens.push_back(std::move(c));
          h = close_generators(g.degree(), gens, cap);
          grown = true;
        }
      }
    }
  }
  return h;
}

void DualEmbedding::validate() const {
  const std::size_t n = group.generators().size();
  if (pattern.size() != n)
    throw std::invalid_argument("pattern has " + std::to_string(pattern.size()) +
                                " rows for " + std::to_string(n) + " generators");
  for (const auto& row : pattern)
    if (row.size() != n) throw std::invalid_argument("pattern is not square");
  if (cutoff < 0 || static_cast<std::size_t>(cutoff) > n)
    throw std::invalid_argument("cutoff k=" + std::to_string(cutoff) + " outside 0.." +
                                std::to_string(n));
  for (std::size_t i = 0; i < n; ++i) {
    bool row_hit = false, col_hit = false;
    for (std::size_t j = 0; j < n; ++j) {
      row_hit = row_hit || pattern[i][j];
      col_hit = col_hit || pattern[j][i];
    }
    if (!row_hit) throw std::invalid_argument("pattern row " + std::to_string(i + 1) + " is zero");
    if (!col_hit)
      throw std::invalid_argument("pattern column " + std::to_string(i + 1) + " is zero");
  }
}

std::vector<std::vector<bool>> DualEmbedding::pattern_from_matrix(
    const std::vector<std::vector<double>>& j, double tol) {
  const std::size_t n = j.size();
  for (const auto& row : j)
    if (row.size() != n) throw std::invalid_argument("J is not square");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      double dot = 0;
      for (std::size_t c = 0; c < n; ++c) dot += j[a][c] * j[b][c];
      if (std::abs(dot - (a == b ? 1.0 : 0.0)) > tol)
        throw std::invalid_argument("J is not orthogonal within tolerance");
    }
  std::vector<std::vector<bool>> pattern(n, std::vector<bool>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) pattern[a][b] = std::abs(j[a][b]) > tol;
  return pattern;
}

std::string DualAnalysis::to_key_values() const {
  std::ostringstream os;
  os << "group_order=" << group_order << '\n'
     << "lambda_order=" << lambda_order << '\n'
     << "lambda_closure_order=" << lambda_closure_order << '\n'
     << "theta_order=" << theta_order << '\n'
     << "verdict=" << (isomorphism ? "isomorphism" : "proper") << '\n'
     << "dim_row_algebra=" << lambda_order << '\n'
     << "dim_quotient_algebra=" << lambda_closure_order << '\n';
  return os.str();
}

FiniteGroup lambda_subgroup(const DualEmbedding& e, std::size_t cap) {
  e.validate();
  const auto& gens = e.group.generators();
  const std::size_t n = gens.size();
  std::vector<Permutation> selected;
  for (std::size_t r = 0; r < n; ++r) {
    bool below = false;
    for (std::size_t i = static_cast<std::size_t>(e.cutoff); i < n && !below; ++i)
      below = e.pattern[i][r];
    if (below) selected.push_back(gens[r]);
  }
  return close_generators(e.group.degree(), std::move(selected), cap);
}

DualAnalysis analyze_embedding(const DualEmbedding& e, std::size_t cap) {
  const FiniteGroup lambda = lambda_subgroup(e, cap);
  const FiniteGroup closure = normal_closure(e.group, lambda.generators(), cap);
  DualAnalysis a;
  a.group_order = e.group.order();
  a.lambda_order = lambda.order();
  a.lambda_closure_order = closure.order();
  a.theta_order = a.group_order / a.lambda_closure_order;
  a.isomorphism = a.lambda_order == a.lambda_closure_order;
  return a;
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

int parse_int(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != value.size())
    throw std::invalid_argument("bad integer for " + key + ": '" + value + "'");
  return v;
}

std::vector<double> parse_row(const std::string& line) {
  std::istringstream in(line);
  std::vector<double> row;
  std::string cell;
  while (in >> cell) {
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
  return row;
}

}  // namespace

DualEmbedding parse_embedding(std::string_view text, std::size_t cap) {
  std::istringstream in{std::string(text)};
  std::string line;
  int degree = -1;
  int k = -1;
  std::vector<std::string> generator_text;
  std::string matrix_key;
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (!matrix_key.empty() && t.find('=') == std::string::npos) {
      rows.push_back(parse_row(t));
      continue;
    }
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("expected key=value: '" + t + "'");
    const std::string key = trim(std::string_view(t).substr(0, eq));
    const std::string value = trim(std::string_view(t).substr(eq + 1));
    if (key == "degree") {
      degree = parse_int(key, value);
    } else if (key == "k") {
      k = parse_int(key, value);
    } else if (key == "generator") {
      generator_text.push_back(value);
    } else if (key == "pattern" || key == "J") {
      if (!matrix_key.empty()) throw std::invalid_argument("more than one pattern/J block");
      matrix_key = key;
      if (!value.empty()) rows.push_back(parse_row(value));
    } else {
      throw std::invalid_argument("unknown key '" + key + "'");
    }
  }
  if (degree < 0) throw std::invalid_argument("missing degree=");
  if (k < 0) throw std::invalid_argument("missing or negative k=");
  if (matrix_key.empty()) throw std::invalid_argument("missing pattern= or J=");
  const std::size_t n = generator_text.size();
  if (rows.size() != n)
    throw std::invalid_argument(matrix_key + " has " + std::to_string(rows.size()) +
                                " rows, expected " + std::to_string(n));
  std::vector<Permutation> gens;
  for (const auto& g : generator_text)
    gens.push_back(Permutation::parse_cycles(g, static_cast<std::size_t>(degree)));

  DualEmbedding e;
  e.group = close_generators(static_cast<std::size_t>(degree), std::move(gens), cap);
  e.cutoff = k;
  if (matrix_key == "pattern") {
    e.pattern.assign(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i) {
      if (rows[i].size() != n) throw std::invalid_argument("pattern is not square");
      for (std::size_t j = 0; j < n; ++j) {
        if (rows[i][j] != 0.0 && rows[i][j] != 1.0)
          throw std::invalid_argument("pattern entries must be 0 or 1");
        e.pattern[i][j] = rows[i][j] == 1.0;
      }
    }
  } else {
    e.pattern = DualEmbedding::pattern_from_matrix(rows);
  }
  e.validate();
  return e;
}

}  // namespace eqg
