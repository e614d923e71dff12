#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "eqg/group_dual.hpp"
#include "oracles.hpp"

using namespace eqg;

namespace {

Permutation cyc(std::string_view text, std::size_t degree) {
  return Permutation::parse_cycles(text, degree);
}

std::vector<std::vector<bool>> identity_pattern(std::size_t n) {
  std::vector<std::vector<bool>> p(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) p[i][i] = true;
  return p;
}

DualEmbedding s3_example() {
  DualEmbedding e;
  e.group = close_generators(3, {cyc("(1 2)", 3), cyc("(1 3)", 3), cyc("(2 3)", 3)});
  e.pattern = identity_pattern(3);
  e.cutoff = 2;
  return e;
}

DualEmbedding z4_example() {
  const auto c = cyc("(1 2 3 4)", 4);
  DualEmbedding e;
  e.group = close_generators(4, {c, c * c});
  e.pattern = identity_pattern(2);
  e.cutoff = 1;
  return e;
}

}  // namespace

TEST_CASE("permutations") {
  const auto a = cyc("(1 2 3)", 3);
  CHECK(a(0) == 1);
  CHECK(a.to_cycles() == "(1 2 3)");
  CHECK((a * a * a).is_identity());
  CHECK((a * a.inverse()).is_identity());
  CHECK(cyc("()", 4).is_identity());
  CHECK(cyc("", 2).is_identity());
  CHECK(cyc("(1 2)(3 4)", 4).to_cycles() == "(1 2)(3 4)");
  // b applied first
  CHECK((cyc("(1 2)", 3) * cyc("(2 3)", 3)).to_cycles() == "(1 2 3)");
  CHECK_THROWS_AS(cyc("(1 5)", 4), std::invalid_argument);
  CHECK_THROWS_AS(cyc("(1 2)(2 3)", 4), std::invalid_argument);
  CHECK_THROWS_AS(cyc("1 2", 4), std::invalid_argument);
}

TEST_CASE("close_generators examples") {
  CHECK(close_generators(3, {cyc("(1 2)", 3)}).order() == 2);
  CHECK(close_generators(3, {cyc("(1 2)", 3), cyc("(2 3)", 3)}).order() == 6);
  CHECK(close_generators(3, {}).order() == 1);
  CHECK(close_generators(5, {cyc("(1 2 3 4 5)", 5), cyc("(1 2)", 5)}).order() == 120);
  CHECK(close_generators(4, {cyc("()", 4), cyc("(1 2)", 4), cyc("(1 2)", 4)}).order() == 2);
  CHECK_THROWS_AS(close_generators(5, {cyc("(1 2 3 4 5)", 5), cyc("(1 2)", 5)}, 100),
                  std::length_error);
  CHECK_THROWS_AS(close_generators(3, {cyc("(1 2)", 4)}), std::invalid_argument);
}

TEST_CASE("normal_closure examples") {
  const auto s3 = close_generators(3, {cyc("(1 2)", 3), cyc("(2 3)", 3)});
  const std::vector<Permutation> transposition{cyc("(2 3)", 3)};
  const auto n1 = normal_closure(s3, transposition);
  CHECK(n1.order() == 6);
  CHECK(is_normal(s3, n1));

  const auto z6 = close_generators(6, {cyc("(1 2 3 4 5 6)", 6)});
  const std::vector<Permutation> square{cyc("(1 3 5)(2 4 6)", 6)};
  CHECK(normal_closure(z6, square).order() == 3);

  const std::vector<Permutation> id{Permutation::identity(3)};
  CHECK(normal_closure(s3, id).order() == 1);

  const std::vector<Permutation> outside{cyc("(1 2)", 3)};
  const auto z3 = close_generators(3, {cyc("(1 2 3)", 3)});
  CHECK_THROWS_AS(normal_closure(z3, outside), std::invalid_argument);

  // A4 inside S4: the Klein subgroup is normal, a single double transposition is not.
  const auto s4 = close_generators(4, {cyc("(1 2)", 4), cyc("(1 2 3 4)", 4)});
  const std::vector<Permutation> dt{cyc("(1 2)(3 4)", 4)};
  CHECK(normal_closure(s4, dt).order() == 4);
  CHECK_FALSE(is_normal(s4, close_generators(4, dt)));
}

TEST_CASE("normal closure equals the kernel of the quotient map (congruence oracle)") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t degree = 3 + trial % 3;
    std::vector<Permutation> gens;
    for (int g = 0; g < 2; ++g) gens.push_back(eqg::testing::random_permutation(degree, rng));
    const auto group = close_generators(degree, gens);
    const auto elems = group.elements();
    std::vector<Permutation> subset{elems[rng() % elems.size()]};
    if (trial % 2) subset.push_back(elems[rng() % elems.size()]);
    const auto closure = normal_closure(group, subset);
    const auto kernel = eqg::testing::quotient_kernel(group, subset);
    const auto got = closure.elements();
    CHECK(std::set<Permutation>(got.begin(), got.end()) == kernel);
    CHECK(is_normal(group, closure));
  }
}

TEST_CASE("analyze_embedding examples") {
  const auto s3 = analyze_embedding(s3_example());
  CHECK(s3.lambda_order == 2);
  CHECK(s3.lambda_closure_order == 6);
  CHECK(s3.theta_order == 1);
  CHECK_FALSE(s3.isomorphism);

  const auto z4 = analyze_embedding(z4_example());
  CHECK(z4.lambda_order == 2);
  CHECK(z4.lambda_closure_order == 2);
  CHECK(z4.theta_order == 2);
  CHECK(z4.isomorphism);

  for (auto e : {s3_example(), z4_example()}) {
    e.cutoff = static_cast<int>(e.group.generators().size());
    const auto a = analyze_embedding(e);
    CHECK(a.lambda_order == 1);
    CHECK(a.isomorphism);
    CHECK(a.theta_order == e.group.order());
  }
}

TEST_CASE("identity pattern gives Lambda = <g_{k+1}, ..., g_n>") {
  auto e = s3_example();
  for (int k = 0; k <= 3; ++k) {
    e.cutoff = k;
    std::vector<Permutation> tail(e.group.generators().begin() + k, e.group.generators().end());
    CHECK(lambda_subgroup(e).elements() == close_generators(3, tail).elements());
  }
}

TEST_CASE("analysis depends only on the zero pattern of J") {
  const double c = std::cos(0.3), s = std::sin(0.3);
  const std::vector<std::vector<double>> j1{{c, s, 0}, {-s, c, 0}, {0, 0, 1}};
  const double c2 = std::cos(1.1), s2 = std::sin(1.1);
  const std::vector<std::vector<double>> j2{{c2, -s2, 0}, {s2, c2, 0}, {0, 0, -1}};
  const auto p1 = DualEmbedding::pattern_from_matrix(j1);
  CHECK(p1 == DualEmbedding::pattern_from_matrix(j2));
  auto e = s3_example();
  e.pattern = p1;
  for (int k = 0; k <= 3; ++k) {
    e.cutoff = k;
    const auto a = analyze_embedding(e);
    CHECK(a.isomorphism == (a.lambda_order == a.lambda_closure_order));
  }
  e.cutoff = 2;
  // row 3 only touches g_3 = (2 3)
  CHECK(analyze_embedding(e).lambda_order == 2);
  e.cutoff = 1;
  // rows 2,3 touch all generators
  CHECK(analyze_embedding(e).lambda_order == 6);

  const std::vector<std::vector<double>> not_orthogonal{{1, 1}, {0, 1}};
  CHECK_THROWS_AS(DualEmbedding::pattern_from_matrix(not_orthogonal), std::invalid_argument);
}

TEST_CASE("degenerate patterns are rejected") {
  auto e = s3_example();
  e.pattern[1][1] = false;
  CHECK_THROWS_AS(analyze_embedding(e), std::invalid_argument);
  e = s3_example();
  e.cutoff = 4;
  CHECK_THROWS_AS(analyze_embedding(e), std::invalid_argument);
}

TEST_CASE("embedding file format") {
  const auto e = parse_embedding(
      "degree=3\nk=2\ngenerator=(1 2)\ngenerator=(1 3)\ngenerator=(2 3)\n"
      "pattern=1 0 0\n0 1 0\n0 0 1\n");
  CHECK(e.group.order() == 6);
  CHECK(analyze_embedding(e).to_key_values() ==
        "group_order=6\nlambda_order=2\nlambda_closure_order=6\ntheta_order=1\n"
        "verdict=proper\ndim_row_algebra=2\ndim_quotient_algebra=6\n");

  const auto z = parse_embedding(
      "# Z4 with g1 = c, g2 = c^2\ndegree=4\nk=1\ngenerator=(1 2 3 4)\n"
      "generator=(1 3)(2 4)\npattern=\n1 0\n0 1\n");
  CHECK(analyze_embedding(z).isomorphism);

  const auto j = parse_embedding(
      "degree=3\nk=1\ngenerator=(1 2)\ngenerator=(2 3)\nJ=0.6 0.8\n-0.8 0.6\n");
  CHECK(j.pattern == std::vector<std::vector<bool>>{{true, true}, {true, true}});

  CHECK_THROWS_AS(parse_embedding("degree=3\nk=1\ngenerator=(1 2)\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_embedding("degree=3\nk=1\ngenerator=(1 2)\npattern=1 0\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_embedding("degree=3\nk=0\ngenerator=(1 2)\npattern=2\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_embedding("degree=3\nk=0\ncolour=red\n"), std::invalid_argument);
}
