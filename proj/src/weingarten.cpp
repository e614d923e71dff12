#include "eqg/weingarten.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

namespace eqg {

MomentWord::MomentWord(std::vector<Letter> letters, int dimension)
    : letters_(std::move(letters)), dimension_(dimension) {
  if (dimension_ < 1) throw std::out_of_range("dimension must be at least 1");
  for (const auto& l : letters_)
    if (l.row < 1 || l.row > dimension_ || l.col < 1 || l.col > dimension_)
      throw std::out_of_range("index pair " + std::to_string(l.row) + "," + std::to_string(l.col) +
                              " outside 1.." + std::to_string(dimension_));
}

std::vector<int> MomentWord::row_indices() const {
  std::vector<int> out;
  out.reserve(letters_.size());
  for (const auto& l : letters_) out.push_back(l.row);
  return out;
}

std::vector<int> MomentWord::col_indices() const {
  std::vector<int> out;
  out.reserve(letters_.size());
  for (const auto& l : letters_) out.push_back(l.col);
  return out;
}

std::string MomentWord::to_string() const {
  std::string out;
  for (std::size_t t = 0; t < letters_.size(); ++t) {
    if (t) out += ' ';
    out += std::to_string(letters_[t].row) + "," + std::to_string(letters_[t].col);
  }
  return out;
}

std::string RationalMatrix::to_tsv() const {
  std::ostringstream os;
  os << "partition";
  for (const auto& p : order) os << '\t' << p.to_string();
  os << '\n';
  for (std::size_t i = 0; i < order.size(); ++i) {
    os << order[i].to_string();
    for (std::size_t j = 0; j < order.size(); ++j) os << '\t' << eqg::to_string(entries(i, j));
    os << '\n';
  }
  return os.str();
}

SingularGram::SingularGram(std::size_t rank, std::size_t order)
    : std::runtime_error("singular Gram, rank " + std::to_string(rank) + " of " +
                         std::to_string(order)),
      rank_(rank),
      order_(order) {}

namespace {

void require_weingarten_domain(Category cat, int n) {
  if (is_primed(cat))
    throw std::invalid_argument("no Weingarten calculus for primed category " +
                                std::string(category_name(cat)));
  if (n < 1) throw std::invalid_argument("dimension n must be at least 1");
}

IntMatrix gram_over(const std::vector<SetPartition>& order, int n) {
  const std::size_t m = order.size();
  IntMatrix g(m, m);
  std::vector<Integer> powers(order.empty() ? 1 : order.front().points() + 1);
  for (std::size_t e = 0; e < powers.size(); ++e) mpz_ui_pow_ui(powers[e].get_mpz_t(), n, e);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      g(i, j) = powers[join(order[i], order[j]).block_count];
      g(j, i) = g(i, j);
    }
  return g;
}

std::shared_ptr<const WeingartenKernel> build_kernel(Category cat, std::size_t s, int n) {
  auto k = std::make_shared<WeingartenKernel>();
  k->order = enumerate_category(cat, s);
  const IntMatrix g = gram_over(k->order, n);
  const EchelonInfo info = echelon(g);
  k->rank = info.rank;
  k->basis = info.pivot_columns;
  auto inv = invert(principal_submatrix(g, k->basis));
  if (!inv) throw std::logic_error("restricted Gram matrix on pivot partitions is singular");
  k->basis_inverse = std::move(*inv);
  return k;
}

struct CacheSlot {
  std::once_flag once;
  std::shared_ptr<const WeingartenKernel> value;
};

using CacheKey = std::tuple<Category, std::size_t, int>;

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::map<CacheKey, std::shared_ptr<CacheSlot>>& cache_table() {
  static std::map<CacheKey, std::shared_ptr<CacheSlot>> table;
  return table;
}

}  // namespace

std::shared_ptr<const WeingartenKernel> weingarten_kernel(Category cat, std::size_t s, int n) {
  require_weingarten_domain(cat, n);
  std::shared_ptr<CacheSlot> slot;
  {
    std::lock_guard lock(cache_mutex());
    auto& entry = cache_table()[{cat, s, n}];
    if (!entry) entry = std::make_shared<CacheSlot>();
    slot = entry;
  }
  std::call_once(slot->once, [&] { slot->value = build_kernel(cat, s, n); });
  return slot->value;
}

void clear_weingarten_cache() {
  std::lock_guard lock(cache_mutex());
  cache_table().clear();
}

std::size_t weingarten_cache_size() {
  std::lock_guard lock(cache_mutex());
  return cache_table().size();
}

IntMatrix gram_integers(Category cat, std::size_t s, int n) {
  require_weingarten_domain(cat, n);
  return gram_over(enumerate_category(cat, s), n);
}

RationalMatrix gram_matrix(Category cat, std::size_t s, int n) {
  require_weingarten_domain(cat, n);
  auto order = enumerate_category(cat, s);
  QMatrix entries = to_rational(gram_over(order, n));
  return {std::move(order), std::move(entries)};
}

std::size_t gram_rank(Category cat, std::size_t s, int n) {
  return echelon(gram_integers(cat, s, n)).rank;
}

RationalMatrix weingarten_matrix(Category cat, std::size_t s, int n) {
  auto k = weingarten_kernel(cat, s, n);
  if (!k->invertible()) throw SingularGram(k->rank, k->order.size());
  return {k->order, k->basis_inverse};
}

Rational haar_moment(Category cat, const MomentWord& word) {
  auto k = weingarten_kernel(cat, word.size(), word.dimension());
  const auto rows = word.row_indices();
  const auto cols = word.col_indices();
  const std::size_t m = k->basis.size();
  std::vector<int> row_delta(m), col_delta(m);
  for (std::size_t a = 0; a < m; ++a) {
    row_delta[a] = delta(k->order[k->basis[a]], rows);
    col_delta[a] = delta(k->order[k->basis[a]], cols);
  }
  Rational sum = 0;
  for (std::size_t a = 0; a < m; ++a) {
    if (!row_delta[a]) continue;
    for (std::size_t b = 0; b < m; ++b)
      if (col_delta[b]) sum += k->basis_inverse(a, b);
  }
  return sum;
}

Rational character_moment(Category cat, int n, std::size_t s) {
  const RationalMatrix w = weingarten_matrix(cat, s, n);
  const IntMatrix g = gram_integers(cat, s, n);
  Rational trace = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = 0; j < w.size(); ++j) trace += w.at(i, j) * Rational(g(j, i));
  return trace;
}

}  // namespace eqg
