#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cuspkit/laurent.hpp"
#include "cuspkit/liecore.hpp"

namespace cuspkit {

// Word over I0. Letters are kept as bytes so short words stay in the small-string buffer.
class Word {
 public:
  Word() = default;
  explicit Word(const std::vector<int>& letters);
  static Word letter(int i) { return Word(std::vector<int>{i}); }

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int operator[](std::size_t k) const { return static_cast<unsigned char>(letters_[k]); }
  std::vector<int> letters() const;
  void push_back(int i) { letters_.push_back(static_cast<char>(i)); }
  Word concat(const Word& o) const;
  RootVec weight(int rank) const;

  // Letters concatenated ("121") when all are single digits, otherwise dot separated ("1.10.2").
  std::string to_string() const;
  static Word parse(const std::string& text);

  friend bool operator==(const Word&, const Word&) = default;
  // Length first, then lexicographic.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  std::string letters_;
};

// Finite Z[q,q^-1]-combination of words: a class in the quantum shuffle algebra.
//
// Product convention (the single place where it is fixed): x * y is the sum over all shuffles of
// the letters of x with the letters of y, where every pair (a from x, b from y) in which b ends up
// in front of a contributes the factor q^{-(alpha_a, alpha_b)}. On words:
//
//   (u a) * (v b) = q^{-(alpha_a, wt(v b))} (u * v b) a + (u a * v) b.
//
// With this choice x * y is the graded character of the convolution of the corresponding
// modules, (1) * (2) = 12 + q 21 in type A2, and the coefficient-wise conjugation q -> q^-1 is the
// bar involution: bar(x * y) = q^{(wt x, wt y)} bar(y) * bar(x).
class ShuffleElt {
 public:
  using Terms = std::map<Word, LaurentPoly>;

  ShuffleElt() = default;
  static ShuffleElt unit() { return of(Word(), 1); }
  static ShuffleElt of(const Word& w, LaurentPoly c = 1);
  static ShuffleElt letter(int i) { return of(Word::letter(i)); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  LaurentPoly coeff(const Word& w) const;
  void add(const Word& w, const LaurentPoly& c);

  // Weight shared by all words; nullopt for zero or mixed weights.
  std::optional<RootVec> weight(int rank) const;
  bool is_homogeneous(int rank) const;
  // Largest word in the (length, lex) order.
  const Word& leading_word() const;
  const LaurentPoly& leading_coeff() const;

  ShuffleElt& operator+=(const ShuffleElt& o);
  ShuffleElt& operator-=(const ShuffleElt& o);
  ShuffleElt& operator*=(const LaurentPoly& c);
  friend ShuffleElt operator+(ShuffleElt a, const ShuffleElt& b) { return a += b; }
  friend ShuffleElt operator-(ShuffleElt a, const ShuffleElt& b) { return a -= b; }
  friend ShuffleElt operator*(const LaurentPoly& c, ShuffleElt a) { return a *= c; }
  ShuffleElt shifted(int by) const;
  // Coefficient-wise q -> q^-1, no homogeneity check.
  ShuffleElt conjugated() const;
  // Coefficient-wise evaluation at q = 1.
  std::map<Word, BigInt> at_one() const;

  friend bool operator==(const ShuffleElt&, const ShuffleElt&) = default;

  // {"12": "q{0}:1", "21": "q{1}:1"}
  nlohmann::json to_json() const;
  static ShuffleElt from_json(const nlohmann::json& j);
  std::string pretty() const;

 private:
  Terms terms_;
};

ShuffleElt shuffle_mul(const CartanDatum& c, const ShuffleElt& x, const ShuffleElt& y);
// Word-level product (both factors single words with coefficient 1).
ShuffleElt shuffle_words(const CartanDatum& c, const Word& u, const Word& v);
ShuffleElt shuffle_power(const CartanDatum& c, const ShuffleElt& x, int n);

// Throws DomainError for non-homogeneous input.
ShuffleElt bar(const CartanDatum& c, const ShuffleElt& x);

// (wt x, wt y). Throws DomainError for non-homogeneous input.
int wt_pair(const CartanDatum& c, const ShuffleElt& x, const ShuffleElt& y);

}  // namespace cuspkit
