#include <doctest.h>

#include "oracles.hpp"
#include "printers.hpp"

#include <random>

#include "cuspkit/errors.hpp"
#include "cuspkit/linalg.hpp"

using namespace cuspkit;

namespace {

Word w(const char* s) { return Word::parse(s); }

std::vector<ShuffleElt> a2_family() {
  CartanDatum c = parse_cartan("A2");
  return {ShuffleElt::of(w("12")), shuffle_mul(c, ShuffleElt::letter(2), ShuffleElt::letter(1))};
}

}  // namespace

TEST_CASE("leading word route") {
  SpanSolver s(a2_family());
  CHECK(s.route() == SpanSolver::Route::LeadingWord);
  ShuffleElt x = ShuffleElt::of(w("21"), 1);
  auto coeffs = s.solve(x);
  CHECK(coeffs.size() == 2);
  CHECK(coeffs[1] == LaurentPoly(1));
  CHECK(coeffs[0] == -LaurentPoly::q(1));
}

TEST_CASE("both routes agree") {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> c(-2, 2), e(-2, 2);
  CartanDatum a3 = parse_cartan("A3");
  std::vector<ShuffleElt> family{
      shuffle_mul(a3, ShuffleElt::letter(1), shuffle_mul(a3, ShuffleElt::letter(2), ShuffleElt::letter(3))),
      shuffle_mul(a3, ShuffleElt::of(w("12")), ShuffleElt::letter(3)),
      shuffle_mul(a3, ShuffleElt::letter(1), ShuffleElt::of(w("23"))),
      ShuffleElt::of(w("123"))};
  SpanSolver lead(family, SpanSolver::Route::Elimination);
  CHECK(lead.route() == SpanSolver::Route::Elimination);
  for (int t = 0; t < 20; ++t) {
    std::vector<LaurentPoly> coeffs;
    ShuffleElt x;
    for (const ShuffleElt& b : family) {
      coeffs.push_back(LaurentPoly::monomial(c(rng), e(rng)) + LaurentPoly::monomial(c(rng), e(rng)));
      x += coeffs.back() * b;
    }
    CHECK(lead.solve(x) == coeffs);
    if (SpanSolver::leading_words_distinct(family)) CHECK(SpanSolver(family).solve(x) == coeffs);
  }
}

TEST_CASE("elements outside the span and dependent families") {
  SpanSolver s(a2_family());
  CHECK_THROWS_AS(s.solve(ShuffleElt::of(w("11"))), DomainError);
  // 21 alone is not an integral combination of 12 and 12 + 21 scaled by 2
  SpanSolver half({ShuffleElt::of(w("12")), ShuffleElt::of(w("21"), 2)}, SpanSolver::Route::Elimination);
  CHECK_THROWS_AS(half.solve(ShuffleElt::of(w("21"))), DomainError);
  ShuffleElt a = ShuffleElt::of(w("12")) + ShuffleElt::of(w("21"));
  CHECK_THROWS_AS(SpanSolver({a, a.shifted(1)}, SpanSolver::Route::Elimination), InvariantViolation);
  CHECK(SpanSolver(std::vector<ShuffleElt>{}).solve(ShuffleElt()).empty());
}
