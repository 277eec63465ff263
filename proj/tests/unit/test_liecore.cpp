#include <doctest.h>

#include <random>
#include <set>

#include "cuspkit/errors.hpp"
#include "cuspkit/liecore.hpp"
#include "oracles.hpp"
#include "printers.hpp"

using namespace cuspkit;

namespace {

RootVec rv(std::vector<int> c) { return RootVec(std::move(c)); }

bool connected(const CartanDatum& c) {
  std::set<int> seen{1};
  std::vector<int> stack{1};
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j : c.neighbors(i))
      if (seen.insert(j).second) stack.push_back(j);
  }
  return static_cast<int>(seen.size()) == c.rank();
}

}  // namespace

TEST_CASE("root system sizes") {
  CHECK(build_root_system(Series::A, 2).num_positive() == 3);
  CHECK(build_root_system(Series::A, 3).num_positive() == 6);
  CHECK(build_root_system(Series::D, 4).num_positive() == 12);
  for (int n = 1; n <= 6; ++n) CHECK(build_root_system(Series::A, n).num_positive() == static_cast<std::size_t>(n * (n + 1) / 2));
  for (int n = 4; n <= 7; ++n) CHECK(build_root_system(Series::D, n).num_positive() == static_cast<std::size_t>(n * (n - 1)));
  CHECK(build_root_system(Series::E, 6).num_positive() == 36);
  CHECK(build_root_system(Series::E, 7).num_positive() == 63);
  CHECK(build_root_system(Series::E, 8).num_positive() == 120);
}

TEST_CASE("A2 positive roots in canonical order") {
  auto rs = build_root_system(Series::A, 2);
  CHECK(rs.positive_roots() == std::vector<RootVec>{rv({0, 1}), rv({1, 0}), rv({1, 1})});
  CHECK(rs.is_positive_root(rv({1, 1})));
  CHECK_FALSE(rs.is_positive_root(rv({2, 1})));
}

TEST_CASE("invalid Cartan types") {
  CHECK_THROWS_AS(CartanDatum::make(Series::A, 0), ConfigError);
  CHECK_THROWS_AS(CartanDatum::make(Series::D, 3), ConfigError);
  CHECK_THROWS_AS(CartanDatum::make(Series::E, 5), ConfigError);
  CHECK_THROWS_AS(CartanDatum::make(Series::E, 9), ConfigError);
  CHECK_THROWS_AS(parse_cartan("B2"), ConfigError);
  CHECK_THROWS_AS(parse_cartan("A"), ConfigError);
  CHECK_THROWS_AS(parse_cartan("Ax"), ConfigError);
  CHECK(parse_cartan("D5").name() == "D5");
}

TEST_CASE("Cartan matrix invariants") {
  for (const char* name : {"A1", "A2", "A5", "D4", "D6", "E6", "E7", "E8"}) {
    CartanDatum c = parse_cartan(name);
    CAPTURE(name);
    for (int i = 1; i <= c.rank(); ++i) {
      CHECK(c.entry(i, i) == 2);
      for (int j = 1; j <= c.rank(); ++j) {
        CHECK(c.entry(i, j) == c.entry(j, i));
        if (i != j) CHECK((c.entry(i, j) == 0 || c.entry(i, j) == -1));
      }
    }
    CHECK(c.edges().size() == static_cast<std::size_t>(c.rank() - 1));
    CHECK(connected(c));
  }
  CartanDatum d4 = parse_cartan("D4");
  CHECK(d4.neighbors(2) == std::vector<int>{1, 3, 4});
  CartanDatum e6 = parse_cartan("E6");
  CHECK(e6.neighbors(4) == std::vector<int>{2, 3, 5});
  CHECK(e6.distance(1, 6) == 4);
}

TEST_CASE("reflections") {
  CartanDatum a2 = parse_cartan("A2");
  CHECK(reflection(a2, 1, rv({0, 1})) == rv({1, 1}));
  CHECK(reflection(a2, 1, rv({1, 0})) == rv({-1, 0}));
  CartanDatum a3 = parse_cartan("A3");
  // oracle: matrix arithmetic
  RootVec v = rv({1, 1, 1});
  CHECK(reflection(a3, 2, v) == oracle::act(oracle::reflection_matrix(a3, 2), v));
  CHECK(reflection(a3, 2, v) == rv({1, 1, 1}));
  for (const char* name : {"A3", "D4", "E6"}) {
    auto rs = build_root_system(parse_cartan(name));
    for (const RootVec& r : rs.positive_roots())
      for (int i = 1; i <= rs.rank(); ++i) {
        CHECK(reflection(rs.cartan(), i, reflection(rs.cartan(), i, r)) == r);
        CHECK(reflection(rs.cartan(), i, r) == oracle::act(oracle::reflection_matrix(rs.cartan(), i), r));
      }
  }
}

TEST_CASE("pairing") {
  CartanDatum a2 = parse_cartan("A2");
  CHECK(pairing(a2, rv({1, 0}), rv({1, 0})) == 2);
  CHECK(pairing(a2, rv({1, 0}), rv({0, 1})) == -1);
  CHECK(pairing(a2, rv({1, 1}), rv({1, 0})) == 1);
}

TEST_CASE("beta sequences") {
  auto a2 = build_root_system(Series::A, 2);
  CHECK(beta_sequence(a2, parse_word("1,2,1")).betas == std::vector<RootVec>{rv({1, 0}), rv({1, 1}), rv({0, 1})});
  CHECK(beta_sequence(a2, parse_word("2,1,2")).betas == std::vector<RootVec>{rv({0, 1}), rv({1, 1}), rv({1, 0})});
  auto a3 = build_root_system(Series::A, 3);
  ReducedWord w = parse_word("1,2,1,3,2,1");
  ConvexSeq seq = beta_sequence(a3, w);
  CHECK(seq.betas == oracle::betas_by_matrices(a3.cartan(), w.letters));
  std::set<RootVec> got(seq.betas.begin(), seq.betas.end());
  CHECK(got == std::set<RootVec>(a3.positive_roots().begin(), a3.positive_roots().end()));
  CHECK(seq.position(rv({1, 1, 1})).has_value());
  CHECK_THROWS_AS(beta_sequence(a2, parse_word("1,1,2")), InvalidWordError);
  CHECK_THROWS_AS(beta_sequence(a2, parse_word("1,2")), InvalidWordError);
  CHECK_THROWS_AS(beta_sequence(a2, parse_word("1,2,3")), InvalidWordError);
  CHECK_THROWS_AS(beta_sequence(a2, parse_word("1,2,1,2")), InvalidWordError);
}

TEST_CASE("word parsing") {
  CHECK(parse_word("1,2,1").letters == std::vector<int>{1, 2, 1});
  CHECK(parse_word("1 2 1").letters == std::vector<int>{1, 2, 1});
  CHECK(parse_word("121").letters == std::vector<int>{1, 2, 1});
  CHECK(parse_word("1,2,1").to_string() == "1,2,1");
  CHECK_THROWS_AS(parse_word("1,x"), ConfigError);
}

TEST_CASE("reduced word enumeration") {
  auto a2 = build_root_system(Series::A, 2);
  WordEnumeration e = enumerate_reduced_words(a2, 100);
  CHECK_FALSE(e.truncated);
  CHECK(e.words == std::vector<ReducedWord>{parse_word("121"), parse_word("212")});
  WordEnumeration one = enumerate_reduced_words(a2, 1);
  CHECK(one.words.size() == 1);
  CHECK(one.truncated);

  // oracles: permutation DFS and the hook length formula for staircase tableaux
  auto a3 = build_root_system(Series::A, 3);
  WordEnumeration e3 = enumerate_reduced_words(a3, 1000);
  CHECK(oracle::count_reduced_words_type_a(3) == 16);
  CHECK(oracle::staircase_syt(3) == 16);
  CHECK(e3.words.size() == 16);
  CHECK_FALSE(e3.truncated);
  std::set<ReducedWord> distinct(e3.words.begin(), e3.words.end());
  CHECK(distinct.size() == 16);
  for (const ReducedWord& w : e3.words) CHECK(w.size() == a3.num_positive());

  auto a4 = build_root_system(Series::A, 4);
  CHECK(enumerate_reduced_words(a4, 100000).words.size() == oracle::count_reduced_words_type_a(4));
  CHECK(oracle::staircase_syt(4) == 768);
}

TEST_CASE("reduced words give convex bijections") {
  for (const char* name : {"A2", "A3", "A4"}) {
    auto rs = build_root_system(parse_cartan(name));
    std::set<RootVec> all(rs.positive_roots().begin(), rs.positive_roots().end());
    for (const ReducedWord& w : enumerate_reduced_words(rs, 1000).words) {
      ConvexSeq seq = beta_sequence(rs, w);
      CHECK(std::set<RootVec>(seq.betas.begin(), seq.betas.end()) == all);
      CHECK(convexity_check(rs, seq.betas));
    }
  }
}

TEST_CASE("random reduced words") {
  std::mt19937_64 rng(7);
  for (const char* name : {"D4", "D5", "E6"}) {
    auto rs = build_root_system(parse_cartan(name));
    for (int t = 0; t < 5; ++t) {
      ReducedWord w = random_reduced_word(rs, rng);
      CHECK(w.size() == rs.num_positive());
      CHECK(is_reduced(rs.cartan(), w));
      CHECK(convexity_check(rs, beta_sequence(rs, w).betas));
    }
  }
}

TEST_CASE("convexity check") {
  auto a2 = build_root_system(Series::A, 2);
  std::vector<RootVec> good{rv({1, 0}), rv({1, 1}), rv({0, 1})};
  std::vector<RootVec> bad{rv({1, 1}), rv({1, 0}), rv({0, 1})};
  CHECK(convexity_check(a2, good));
  CHECK_FALSE(convexity_check(a2, bad));
  std::vector<RootVec> nonroot{rv({2, 1}), rv({1, 0})};
  CHECK_THROWS_AS(convexity_check(a2, nonroot), DomainError);
}

TEST_CASE("involution and Coxeter number") {
  auto a2 = involution_and_coxeter(build_root_system(Series::A, 2));
  CHECK(a2.star == std::vector<int>{2, 1});
  CHECK(a2.coxeter == 3);
  auto a3 = involution_and_coxeter(build_root_system(Series::A, 3));
  CHECK(a3.star == std::vector<int>{3, 2, 1});
  CHECK(a3.coxeter == 4);
  auto d4 = involution_and_coxeter(build_root_system(Series::D, 4));
  CHECK(d4.star == std::vector<int>{1, 2, 3, 4});
  CHECK(d4.coxeter == 6);
  auto d5 = involution_and_coxeter(build_root_system(Series::D, 5));
  CHECK(d5.star == std::vector<int>{1, 2, 3, 5, 4});
  CHECK(d5.coxeter == 8);
  auto e6 = involution_and_coxeter(build_root_system(Series::E, 6));
  CHECK(e6.star == std::vector<int>{6, 2, 5, 4, 3, 1});
  CHECK(e6.coxeter == 12);
}

TEST_CASE("involution is -w0 on simple roots") {
  for (const char* name : {"A1", "A4", "D4", "D5", "E6"}) {
    auto rs = build_root_system(parse_cartan(name));
    InvolutionData inv = involution_and_coxeter(rs);
    ReducedWord w0 = enumerate_reduced_words(rs, 1).words.front();
    // oracle: w0 as a product of reflection matrices
    oracle::Mat m = oracle::reflection_matrix(rs.cartan(), w0.letters.front());
    for (std::size_t k = 1; k < w0.size(); ++k) m = oracle::mat_mul(m, oracle::reflection_matrix(rs.cartan(), w0.letters[k]));
    for (int i = 1; i <= rs.rank(); ++i) {
      CHECK(inv(inv(i)) == i);
      CHECK(oracle::act(m, RootVec::simple(rs.rank(), i)) == -RootVec::simple(rs.rank(), inv(i)));
    }
    CHECK(w0.size() == rs.num_positive());
  }
}
