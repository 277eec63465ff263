#include <doctest.h>

#include "oracles.hpp"
#include "printers.hpp"

#include <random>

#include "cuspkit/errors.hpp"
#include "cuspkit/laurent.hpp"

using namespace cuspkit;

namespace {

LaurentPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3), expo(-4, 4), count(0, 4);
  LaurentPoly p;
  for (int t = count(rng); t > 0; --t) p += LaurentPoly::monomial(coeff(rng), expo(rng));
  return p;
}

}  // namespace

TEST_CASE("canonical form") {
  LaurentPoly p = LaurentPoly::q(2) + LaurentPoly::q(-1) - LaurentPoly::q(2);
  CHECK(p == LaurentPoly::q(-1));
  CHECK(p.num_terms() == 1);
  CHECK((LaurentPoly::q(3) - LaurentPoly::q(3)).is_zero());
  CHECK(LaurentPoly().to_string() == "0");
  CHECK((LaurentPoly::q(-2) + 1).to_string() == "q{-2}:1,q{0}:1");
  CHECK(LaurentPoly::parse("q{-2}:1,q{0}:1") == LaurentPoly::q(-2) + 1);
  CHECK(LaurentPoly::parse("0").is_zero());
  CHECK((LaurentPoly::q(-2) + 1).pretty() == "1 + q^-2");
  CHECK_THROWS(LaurentPoly::parse("q{x}:1"));
}

TEST_CASE("q-integers") {
  CHECK(LaurentPoly::q_integer(1) == LaurentPoly(1));
  CHECK(LaurentPoly::q_integer(2) == LaurentPoly::q(1) + LaurentPoly::q(-1));
  CHECK(LaurentPoly::q_integer(3) == LaurentPoly::q(2) + 1 + LaurentPoly::q(-2));
  CHECK(LaurentPoly::q_factorial(3) == LaurentPoly::q_integer(2) * LaurentPoly::q_integer(3));
  CHECK(LaurentPoly::q_factorial(5).at_one() == 120);
  for (int n = 1; n < 8; ++n) CHECK(LaurentPoly::q_integer(n).bar() == LaurentPoly::q_integer(n));
}

TEST_CASE("monomials and units") {
  CHECK(LaurentPoly::q(4).unit_exponent() == 4);
  CHECK_FALSE(LaurentPoly::monomial(2, 4).unit_exponent().has_value());
  CHECK(LaurentPoly::monomial(2, 4).is_monomial());
  CHECK_FALSE((LaurentPoly::q(1) + 1).is_monomial());
  CHECK(LaurentPoly::monomial(-5, 3).coeff(3) == -5);
  CHECK(LaurentPoly::monomial(-5, 3).coeff(2) == 0);
}

TEST_CASE("big coefficients stay exact") {
  LaurentPoly p = LaurentPoly::q(1) + 1;
  LaurentPoly acc = 1;
  for (int k = 0; k < 80; ++k) acc *= p;
  BigInt expect = 1;
  for (int k = 0; k < 80; ++k) expect *= 2;
  CHECK(acc.at_one() == expect);
  CHECK(acc.coeff(40) > BigInt(1) << 70);
  CHECK(acc.divide_exact(p.shifted(-1)).has_value());
}

TEST_CASE("division and gcd") {
  LaurentPoly a = (LaurentPoly::q(1) + 1) * (LaurentPoly::q(2) - 3);
  CHECK(a.divide_exact(LaurentPoly::q(1) + 1) == LaurentPoly::q(2) - 3);
  CHECK_FALSE(a.divide_exact(LaurentPoly::q(1) + 2).has_value());
  CHECK(LaurentPoly::monomial(6, 1).divide_by_integer(3) == LaurentPoly::monomial(2, 1));
  CHECK((LaurentPoly::monomial(6, 1) + LaurentPoly::monomial(-4, 3)).content() == 2);
  LaurentPoly g = gcd(a.shifted(-3), (LaurentPoly::q(1) + 1) * (LaurentPoly::q(1) - 1));
  CHECK(g == LaurentPoly::q(1) + 1);
  CHECK(gcd(LaurentPoly(), LaurentPoly()).is_zero());
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b).bar() == a.bar() * b.bar());
    CHECK(a.bar().bar() == a);
    CHECK((a * b).at_one() == a.at_one() * b.at_one());
    CHECK(LaurentPoly::parse(a.to_string()) == a);
    if (!b.is_zero()) CHECK((a * b).divide_exact(b) == a);
  }
}
