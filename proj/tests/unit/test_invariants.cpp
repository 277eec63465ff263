#include <doctest.h>

#include "cuspkit/invariants.hpp"
#include "cuspkit/verify.hpp"
#include "oracles.hpp"
#include "printers.hpp"

using namespace cuspkit;

namespace {

PbwExponent ex(std::vector<int> a) { return PbwExponent(std::move(a)); }

}  // namespace

TEST_CASE("A2 letters") {
  auto rs = build_root_system(Series::A, 2);
  GlobalBasis gb(rs, parse_word("1,2,1"), 4);
  PbwExponent one = ex({1, 0, 0}), two = ex({0, 0, 1});
  CommuteResult cr = commutes(gb, one, two);
  CHECK_FALSE(cr.commutes);
  CHECK(gb.expand(shuffle_mul(rs.cartan(), ShuffleElt::letter(1), ShuffleElt::letter(2))).size() == 2);
  auto l12 = lambda_pair(gb, one, two), l21 = lambda_pair(gb, two, one);
  REQUIRE(l12);
  REQUIRE(l21);
  CHECK(l12 == oracle::lambda_by_expansion(gb, one, two));
  CHECK(l21 == oracle::lambda_by_expansion(gb, two, one));
  CHECK(((*l12 + 1) % 2 + 2) % 2 == 0);
  CHECK(delta_pair(gb, one, two) == 1);
  CHECK(delta_pair(gb, one, two) == -rs.cartan().entry(1, 2));
}

TEST_CASE("A2 commuting pair") {
  auto rs = build_root_system(Series::A, 2);
  GlobalBasis gb(rs, parse_word("1,2,1"), 4);
  PbwExponent x = ex({1, 0, 0}), y = ex({0, 1, 0});
  CommuteResult cr = commutes(gb, x, y);
  REQUIRE(cr.commutes);
  REQUIRE(cr.exponent);
  // oracle: (1) * (12) = q^-1 * 112-class element
  ShuffleElt prod = oracle::shuffle_elements(rs.cartan(), gb.element(x).value, gb.element(y).value);
  CHECK(prod == LaurentPoly::q(*cr.exponent) * gb.element(*cr.product_label).value);
  CHECK(cr.product_label == ex({1, 1, 0}));
  CHECK(lambda_pair(gb, x, y) == -*lambda_pair(gb, y, x));
  CHECK(delta_pair(gb, x, y) == 0);
}

TEST_CASE("real elements") {
  auto rs = build_root_system(Series::A, 2);
  GlobalBasis gb(rs, parse_word("1,2,1"), 6);
  for (const PbwExponent& x : {ex({1, 0, 0}), ex({0, 1, 0}), ex({0, 0, 1}), ex({1, 0, 1})}) {
    CHECK(commutes(gb, x, x).commutes);
    CHECK(lambda_pair(gb, x, x) == 0);
    CHECK(delta_pair(gb, x, x) == 0);
  }
}

TEST_CASE("pair invariants over A2 and A3") {
  for (const char* name : {"A2", "A3"}) {
    auto rs = build_root_system(parse_cartan(name));
    GlobalBasis gb(rs, enumerate_reduced_words(rs, 1).words.front(), 6);
    std::vector<PbwExponent> labels;
    for (const RootVec& mu : weights_up_to(rs.rank(), 3))
      for (const PbwExponent& a : gb.at_weight(mu).exponents) labels.push_back(a);
    for (const PbwExponent& x : labels)
      for (const PbwExponent& y : labels) {
        PairInvariants pi = pair_invariants(gb, x, y);
        INFO(name, " ", x.to_string(), " ", y.to_string());
        CHECK(pi.lambda_xy == oracle::lambda_by_expansion(gb, x, y));
        CHECK(pi.wt_pair == wt_pair(rs.cartan(), gb.element(x).value, gb.element(y).value));
        if (!pi.lambda_xy || !pi.lambda_yx) continue;
        REQUIRE(pi.delta);
        CHECK(2 * *pi.delta == *pi.lambda_xy + *pi.lambda_yx);
        CHECK(*pi.delta >= 0);
        CHECK((*pi.delta == 0) == pi.commute.commutes);
        CHECK(((*pi.lambda_xy - pi.wt_pair) % 2 + 2) % 2 == 0);
        if (pi.commute.commutes) CHECK(*pi.lambda_xy == -*pi.lambda_yx);
      }
  }
}

TEST_CASE("JSON form") {
  auto rs = build_root_system(Series::A, 2);
  GlobalBasis gb(rs, parse_word("1,2,1"), 4);
  nlohmann::json j = pair_invariants(gb, ex({1, 0, 0}), ex({0, 1, 0})).to_json();
  CHECK(j["commutes"] == true);
  CHECK(j["delta"] == 0);
  CHECK(j["product_label"] == "(1,1,0)");
}
