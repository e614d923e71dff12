#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "eqg/homspace.hpp"
#include "eqg/oracle.hpp"
#include "oracles.hpp"

using namespace eqg;

namespace {

TruncatedMatrix bottom_rows(const RealMatrix& m, std::size_t k) {
  const std::size_t n = m.rows();
  std::vector<double> entries;
  for (std::size_t i = k; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) entries.push_back(m(i, j));
  return TruncatedMatrix(n - k, n, std::move(entries));
}

bool has(const std::set<MatrixClass>& s, MatrixClass c) { return s.contains(c); }

}  // namespace

TEST_CASE("invariant_state_moment examples") {
  CHECK(invariant_state_moment(Category::Sfree, 2, MomentWord({{4, 1}, {4, 1}}, 5)) ==
        Rational(1, 5));
  CHECK(invariant_state_moment(Category::Ofree, 2, MomentWord({{3, 1}, {3, 2}}, 3)) == 0);
  for (Category c : kUnprimedCategories) {
    CHECK_THROWS_AS(invariant_state_moment(c, 3, MomentWord({{3, 1}}, 3)), std::out_of_range);
    CHECK(invariant_state_moment(c, 3, MomentWord({}, 3)) == 1);
  }
  CHECK_THROWS_AS(invariant_state_moment(Category::Sfree, 1, MomentWord({{1, 1}}, 3)),
                  std::out_of_range);
  CHECK_THROWS_AS(invariant_state_moment(Category::Sprime, 0, MomentWord({{1, 1}}, 3)),
                  std::invalid_argument);
}

TEST_CASE("invariant state agrees with the Haar state on admissible words") {
  std::mt19937_64 rng(17);
  for (Category c : kUnprimedCategories)
    for (int trial = 0; trial < 25; ++trial) {
      const int n = 2 + trial % 4;
      const int k = static_cast<int>(rng() % n);
      const int s = static_cast<int>(rng() % 5);
      std::uniform_int_distribution<int> row(k + 1, n), col(1, n);
      std::vector<Letter> letters;
      for (int t = 0; t < s; ++t) letters.push_back({row(rng), col(rng)});
      const MomentWord w(letters, n);
      INFO(category_name(c) << " n=" << n << " k=" << k << " word=" << w.to_string());
      CHECK(invariant_state_moment(c, k, w) == haar_moment(c, w));
    }
}

TEST_CASE("classify examples") {
  const TruncatedMatrix identity_rows(2, 4, {0, 0, 1, 0, 0, 0, 0, 1});
  CHECK(classify(identity_rows) ==
        std::set<MatrixClass>{MatrixClass::OrthogonalIsometry, MatrixClass::MagicIsometry,
                              MatrixClass::CubicIsometry, MatrixClass::StochasticIsometry});

  const double r = 1.0 / std::sqrt(2.0);
  const TruncatedMatrix diagonal_row(1, 3, {r, r, 0});
  CHECK(classify(diagonal_row) == std::set<MatrixClass>{MatrixClass::OrthogonalIsometry});

  const TruncatedMatrix negative(1, 3, {-1, 0, 0});
  CHECK(classify(negative) ==
        std::set<MatrixClass>{MatrixClass::OrthogonalIsometry, MatrixClass::CubicIsometry});

  const TruncatedMatrix not_isometry(1, 2, {1, 1});
  CHECK(classify(not_isometry).empty());
  CHECK(format_classes(classify(not_isometry)) == "none");
  CHECK(format_classes(classify(negative)) == "orthogonal-isometry,cubic-isometry");
}

TEST_CASE("truncated matrix parsing") {
  const auto m = TruncatedMatrix::from_tsv("0\t1\t0\n\n1 0 0\n");
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 3);
  CHECK(m(1, 0) == 1.0);
  CHECK(TruncatedMatrix::from_tsv(m.to_tsv()).to_tsv() == m.to_tsv());
  CHECK_THROWS_AS(TruncatedMatrix::from_tsv("1 0\n0\n"), std::invalid_argument);
  CHECK_THROWS_AS(TruncatedMatrix::from_tsv("1 x\n"), std::invalid_argument);
  CHECK_THROWS_AS(TruncatedMatrix::from_tsv("1\n0\n"), std::invalid_argument);  // rows > cols
  CHECK_THROWS_AS(TruncatedMatrix::from_tsv(""), std::invalid_argument);
}

TEST_CASE("enumerated truncations: classes and the magic = cubic + stochastic equivalence") {
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k < n; ++k) {
      for (const auto& m : enumerate_truncations(TruncationGroup::S, n, k)) {
        const auto c = classify(m);
        CHECK(has(c, MatrixClass::MagicIsometry));
        CHECK(prop52_equivalence(m));
      }
      for (const auto& m : enumerate_truncations(TruncationGroup::H, n, k)) {
        const auto c = classify(m);
        CHECK(has(c, MatrixClass::CubicIsometry));
        bool any_negative = false;
        for (std::size_t i = 0; i < m.rows(); ++i)
          for (std::size_t j = 0; j < m.cols(); ++j) any_negative |= m(i, j) < 0;
        // the row-sum test separates signed models from the magic ones
        CHECK(has(c, MatrixClass::StochasticIsometry) == !any_negative);
        CHECK(has(c, MatrixClass::MagicIsometry) == !any_negative);
        CHECK(prop52_equivalence(m));
      }
    }
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(prop52_equivalence(TruncatedMatrix(1, 3, {r, r, 0})));
  CHECK(prop52_equivalence(TruncatedMatrix(1, 3, {-1, 0, 0})));
}

TEST_CASE("random orthogonal truncations satisfy the equivalence") {
  GaussianSource gauss(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const auto q = haar_orthogonal(gauss, n);
    const auto m = bottom_rows(q, trial % n);
    CHECK(has(classify(m), MatrixClass::OrthogonalIsometry));
    CHECK(prop52_equivalence(m));
  }
}

TEST_CASE("fixed_point_sum_check examples") {
  const TruncatedMatrix magic(2, 4, {0, 0, 1, 0, 0, 0, 0, 1});
  const SetPartition pair = SetPartition::single_block(2);
  const std::vector<int> distinct{1, 2}, same{1, 1};
  CHECK(fixed_point_sum_check(magic, Category::Sfree, pair, distinct));
  CHECK(fixed_point_sum_check(magic, Category::Sfree, pair, same));

  GaussianSource gauss(3);
  const auto ortho = bottom_rows(haar_orthogonal(gauss, 4), 1);
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b) {
      const std::vector<int> rows{a, b};
      CHECK(fixed_point_sum_check(ortho, Category::Ofree, pair, rows));
    }

  // an orthogonal truncation is not magic
  CHECK_THROWS_AS(fixed_point_sum_check(ortho, Category::Sfree, pair, same), std::invalid_argument);
  // crossing partitions are outside the free category
  const std::vector<int> four{1, 2, 1, 2};
  CHECK_THROWS_AS(
      fixed_point_sum_check(magic, Category::Sfree, SetPartition::parse("{1,3}{2,4}"), four),
      std::invalid_argument);
  const std::vector<int> bad_row{1, 3};
  CHECK_THROWS_AS(fixed_point_sum_check(magic, Category::Sfree, pair, bad_row),
                  std::invalid_argument);
}

TEST_CASE("fixed-point sums hold for every noncrossing partition in each commuting model") {
  GaussianSource gauss(11);
  struct Model {
    Category cat;
    std::vector<TruncatedMatrix> samples;
  };
  std::vector<Model> models;
  models.push_back({Category::Sfree, enumerate_truncations(TruncationGroup::S, 4, 2)});
  models.push_back({Category::Hfree, enumerate_truncations(TruncationGroup::H, 3, 1)});
  Model o{Category::Ofree, {}}, b{Category::Bfree, {}};
  for (int t = 0; t < 10; ++t) {
    o.samples.push_back(bottom_rows(haar_orthogonal(gauss, 4), 2));
    b.samples.push_back(bottom_rows(haar_bistochastic(gauss, 4), 2));
  }
  models.push_back(o);
  models.push_back(b);

  for (const auto& model : models)
    for (std::size_t s = 1; s <= 4; ++s)
      for (const auto& p : enumerate_category(model.cat, s))
        for (const auto& rows : eqg::testing::all_tuples(2, static_cast<int>(s)))
          for (const auto& m : model.samples) {
            INFO(category_name(model.cat) << " " << p.to_string());
            CHECK(fixed_point_sum_check(m, model.cat, p, rows, 1e-9));
          }
}

TEST_CASE("count_truncations examples and closed forms") {
  CHECK(count_truncations(TruncationGroup::S, 4, 2) == 12);
  CHECK(count_truncations(TruncationGroup::H, 3, 1) == 24);
  for (int n = 0; n <= 5; ++n) CHECK(count_truncations(TruncationGroup::S, n, n) == 1);
  using eqg::testing::factorial;
  for (int n = 0; n <= 6; ++n)
    for (int k = 0; k <= n; ++k)
      CHECK(count_truncations(TruncationGroup::S, n, k) == factorial(n) / factorial(k));
  for (int n = 0; n <= 4; ++n)
    for (int k = 0; k <= n; ++k)
      CHECK(count_truncations(TruncationGroup::H, n, k) ==
            (std::uint64_t{1} << (n - k)) * factorial(n) / factorial(k));
  CHECK_THROWS_AS(count_truncations(TruncationGroup::S, 9, 1), std::length_error);
  CHECK_THROWS_AS(count_truncations(TruncationGroup::H, 6, 1), std::length_error);
  CHECK(count_truncations(TruncationGroup::H, 6, 5, {8, 6}) == 12);
  CHECK_THROWS_AS(count_truncations(TruncationGroup::S, 3, 4), std::invalid_argument);
}

TEST_CASE("a stochastic isometry with n-1 rows determines the missing row") {
  GaussianSource gauss(77);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const auto m = bottom_rows(haar_bistochastic(gauss, n), 1);
    REQUIRE(has(classify(m), MatrixClass::StochasticIsometry));
    const auto first = missing_stochastic_row(m);
    std::vector<double> square(first);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < n; ++j) square.push_back(m(i, j));
    const TruncatedMatrix full(n, n, square);
    CHECK(has(classify(full), MatrixClass::StochasticIsometry));
    for (std::size_t j = 0; j < n; ++j) {
      double col = 0;
      for (std::size_t i = 0; i < n; ++i) col += full(i, j);
      CHECK(col == doctest::Approx(1.0).epsilon(1e-9));
    }
  }
}

TEST_CASE("free_projection_witness") {
  CHECK(free_projection_witness(0.0) == doctest::Approx(0.0));
  CHECK(free_projection_witness(std::numbers::pi / 6) ==
        doctest::Approx(std::sqrt(3.0) / 8).epsilon(1e-14));
  CHECK(std::abs(free_projection_witness(std::numbers::pi / 4)) < 1e-15);
  for (int t = 0; t <= 200; ++t) {
    const double theta = -3.0 + 0.03 * t;
    const double c = std::cos(theta), s = std::sin(theta);
    CHECK(std::abs(free_projection_witness(theta) - std::abs(c * s * (c * c - s * s))) < 1e-12);
  }
}
