#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "eqg/linalg.hpp"
#include "eqg/rational.hpp"
#include "eqg/weingarten.hpp"

namespace eqg {

enum class ExactGroup { S, H };

struct OracleCaps {
  int max_n_s = 8;
  int max_n_h = 5;
};

/// Exact Haar average of the word over all n x n permutation matrices (S) or
/// signed permutation matrices (H). Throws std::length_error above the cap.
Rational exact_group_average(ExactGroup group, const MomentWord& word, OracleCaps caps = {});

inline constexpr const char* kGeneratorName = "mt19937_64";

/// Standard normal deviates by the Marsaglia polar method over mt19937_64.
class GaussianSource {
 public:
  explicit GaussianSource(std::uint64_t seed) : engine_(seed) {}
  double next();

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

using RealMatrix = DenseMatrix<double>;

/// Haar orthogonal matrix: Gram-Schmidt on a Gaussian matrix, positive pivots.
RealMatrix haar_orthogonal(GaussianSource& gauss, std::size_t n);

/// Householder reflection sending e_1 to (1,...,1)/sqrt(n); requires n >= 2.
RealMatrix ones_reflection(std::size_t n);

/// Haar element of B_n: R (1 (+) Q) R with Q Haar on O_{n-1}, R = ones_reflection(n).
RealMatrix haar_bistochastic(GaussianSource& gauss, std::size_t n);

double evaluate_word(const RealMatrix& m, const MomentWord& word);

struct SampleReport {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;

  /// "mean stderr samples seed", tab separated.
  std::string to_tsv() const;
};

struct SamplerOptions {
  unsigned workers = 1;
  /// Shard i uses seed + i; results do not depend on workers.
  std::uint64_t shard_size = 8192;
};

SampleReport mc_orthogonal_average(const MomentWord& word, std::uint64_t samples,
                                   std::uint64_t seed, SamplerOptions options = {});

/// Throws std::invalid_argument for n < 2.
SampleReport mc_bistochastic_average(const MomentWord& word, std::uint64_t samples,
                                     std::uint64_t seed, SamplerOptions options = {});

/// |mean - exact| <= max(4 * stderr, 0.01).
bool within_acceptance_band(const SampleReport& report, double exact);

}  // namespace eqg
