#include "eqg/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

namespace eqg {

Rational exact_group_average(ExactGroup group, const MomentWord& word, OracleCaps caps) {
  const int n = word.dimension();
  const int cap = group == ExactGroup::S ? caps.max_n_s : caps.max_n_h;
  if (n > cap)
    throw std::length_error("n=" + std::to_string(n) + " exceeds the exact oracle cap " +
                            std::to_string(cap));
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  const unsigned sign_masks = group == ExactGroup::H ? (1u << n) : 1u;
  Integer total = 0;
  Integer order = 0;
  do {
    for (unsigned mask = 0; mask < sign_masks; ++mask) {
      ++order;
      // Matrix entry (i, perm[i]) carries the sign of row i.
      int value = 1;
      for (const auto& l : word.letters()) {
        const int i = l.row - 1;
        if (perm[i] != l.col - 1) {
          value = 0;
          break;
        }
        if ((mask >> i) & 1u) value = -value;
      }
      total += value;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  Rational avg(total, order);
  avg.canonicalize();
  return avg;
}

double GaussianSource::next() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // 53 random bits mapped to [-1, 1).
  auto uniform = [this] { return static_cast<double>(engine_() >> 11) * 0x1.0p-52 - 1.0; };
  double u, v, s;
  do {
    u = uniform();
    v = uniform();
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double f = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * f;
  has_spare_ = true;
  return u * f;
}

RealMatrix haar_orthogonal(GaussianSource& gauss, std::size_t n) {
  RealMatrix q(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) q(i, j) = gauss.next();
  // Modified Gram-Schmidt on columns; the implied R has a positive diagonal.
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t p = 0; p < j; ++p) {
      double dot = 0;
      for (std::size_t i = 0; i < n; ++i) dot += q(i, p) * q(i, j);
      for (std::size_t i = 0; i < n; ++i) q(i, j) -= dot * q(i, p);
    }
    double norm = 0;
    for (std::size_t i = 0; i < n; ++i) norm += q(i, j) * q(i, j);
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < n; ++i) q(i, j) /= norm;
  }
  return q;
}

RealMatrix ones_reflection(std::size_t n) {
  if (n < 2) throw std::invalid_argument("B_n sampling needs n >= 2");
  const double u = 1.0 / std::sqrt(static_cast<double>(n));
  std::vector<double> v(n, -u);
  v[0] += 1.0;
  double vv = 0;
  for (double x : v) vv += x * x;
  RealMatrix r = RealMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(i, j) -= 2.0 * v[i] * v[j] / vv;
  return r;
}

namespace {

RealMatrix matmul(const RealMatrix& a, const RealMatrix& b) {
  RealMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const double x = a(i, l);
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += x * b(l, j);
    }
  return c;
}

RealMatrix bistochastic_from(const RealMatrix& reflection, const RealMatrix& q) {
  const std::size_t n = reflection.rows();
  RealMatrix block = RealMatrix::identity(n);
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j) block(i, j) = q(i - 1, j - 1);
  return matmul(matmul(reflection, block), reflection);
}

struct ShardStats {
  std::uint64_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;  // sum of squared deviations from the mean
};

template <class Sampler>
SampleReport run_sharded(const MomentWord& word, std::uint64_t samples, std::uint64_t seed,
                         SamplerOptions options, Sampler sample) {
  if (samples == 0) throw std::invalid_argument("need at least one sample");
  if (options.shard_size == 0) throw std::invalid_argument("shard size must be positive");
  const std::uint64_t shards = (samples + options.shard_size - 1) / options.shard_size;
  std::vector<ShardStats> stats(shards);

  auto run_shard = [&](std::uint64_t shard) {
    GaussianSource gauss(seed + shard);
    const std::uint64_t begin = shard * options.shard_size;
    const std::uint64_t count = std::min(options.shard_size, samples - begin);
    ShardStats s;
    for (std::uint64_t t = 0; t < count; ++t) {
      const double x = evaluate_word(sample(gauss), word);
      ++s.count;
      const double d = x - s.mean;
      s.mean += d / static_cast<double>(s.count);
      s.m2 += d * (x - s.mean);
    }
    stats[shard] = s;
  };

  const unsigned workers = std::max(1u, options.workers);
  if (workers == 1) {
    for (std::uint64_t i = 0; i < shards; ++i) run_shard(i);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::uint64_t i = w; i < shards; i += workers) run_shard(i);
      });
    for (auto& t : pool) t.join();
  }

  ShardStats total;
  for (const auto& s : stats) {
    if (s.count == 0) continue;
    const double n_a = static_cast<double>(total.count), n_b = static_cast<double>(s.count);
    const double d = s.mean - total.mean;
    const double n = n_a + n_b;
    total.mean += d * n_b / n;
    total.m2 += s.m2 + d * d * n_a * n_b / n;
    total.count += s.count;
  }
  SampleReport report;
  report.mean = total.mean;
  report.samples = samples;
  report.seed = seed;
  if (samples > 1) {
    const double var = total.m2 / static_cast<double>(samples - 1);
    report.std_error = std::sqrt(var / static_cast<double>(samples));
  }
  return report;
}

}  // namespace

RealMatrix haar_bistochastic(GaussianSource& gauss, std::size_t n) {
  return bistochastic_from(ones_reflection(n), haar_orthogonal(gauss, n - 1));
}

double evaluate_word(const RealMatrix& m, const MomentWord& word) {
  double x = 1.0;
  for (const auto& l : word.letters()) x *= m(l.row - 1, l.col - 1);
  return x;
}

std::string SampleReport::to_tsv() const {
  std::ostringstream os;
  os.precision(17);
  os << mean << '\t' << std_error << '\t' << samples << '\t' << seed;
  return os.str();
}

SampleReport mc_orthogonal_average(const MomentWord& word, std::uint64_t samples,
                                   std::uint64_t seed, SamplerOptions options) {
  const auto n = static_cast<std::size_t>(word.dimension());
  return run_sharded(word, samples, seed, options,
                     [n](GaussianSource& g) { return haar_orthogonal(g, n); });
}

SampleReport mc_bistochastic_average(const MomentWord& word, std::uint64_t samples,
                                     std::uint64_t seed, SamplerOptions options) {
  const auto n = static_cast<std::size_t>(word.dimension());
  const RealMatrix reflection = ones_reflection(n);
  return run_sharded(word, samples, seed, options, [&reflection, n](GaussianSource& g) {
    return bistochastic_from(reflection, haar_orthogonal(g, n - 1));
  });
}

bool within_acceptance_band(const SampleReport& report, double exact) {
  return std::abs(report.mean - exact) <= std::max(4.0 * report.std_error, 0.01);
}

}  // namespace eqg
