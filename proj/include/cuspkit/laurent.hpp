#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cuspkit {

using BigInt = boost::multiprecision::cpp_int;

// Exact element of Z[q, q^-1]. Stored densely from the lowest to the highest exponent; both
// ends are always nonzero and the zero polynomial has no storage.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(int c) : LaurentPoly(BigInt(c)) {}  // NOLINT(google-explicit-constructor)
  LaurentPoly(BigInt c);                          // NOLINT(google-explicit-constructor)
  static LaurentPoly monomial(BigInt c, int exponent);
  static LaurentPoly q(int exponent) { return monomial(1, exponent); }
  // Balanced q-integer [n] = q^{n-1} + q^{n-3} + ... + q^{1-n}.
  static LaurentPoly q_integer(int n);
  static LaurentPoly q_factorial(int n);

  bool is_zero() const { return coeffs_.empty(); }
  int min_exponent() const { return low_; }
  int max_exponent() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  BigInt coeff(int exponent) const;
  std::size_t num_terms() const;
  // (exponent, coefficient), increasing exponent, nonzero only.
  std::vector<std::pair<int, BigInt>> terms() const;

  bool is_monomial() const;
  // Exponent e when the polynomial equals exactly q^e.
  std::optional<int> unit_exponent() const;

  LaurentPoly bar() const;  // q -> q^-1
  LaurentPoly shifted(int by) const;  // q^by * this
  BigInt at_one() const;
  BigInt content() const;  // positive gcd of all coefficients, 0 for zero

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  // Quotient if `d` divides this polynomial in Z[q, q^-1], nullopt otherwise.
  std::optional<LaurentPoly> divide_exact(const LaurentPoly& d) const;
  LaurentPoly divide_by_integer(const BigInt& d) const;  // must be exact

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  // Canonical form "q{-2}:1,q{0}:1"; the zero polynomial is "0".
  std::string to_string() const;
  static LaurentPoly parse(std::string_view text);
  // Human-readable "q^-2 + 1".
  std::string pretty() const;

 private:
  void trim();

  int low_ = 0;
  std::vector<BigInt> coeffs_;
};

// Greatest common divisor in Z[q, q^-1], normalised to lowest exponent 0 and positive leading
// coefficient. gcd(0, 0) = 0.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace cuspkit
