#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "cuspkit/pbw.hpp"

namespace cuspkit {

// Finitely supported function Z -> Z_{>=0}.
class CuspParam {
 public:
  CuspParam() = default;
  explicit CuspParam(std::map<int, int> entries);
  static CuspParam unit(int k) { return CuspParam(std::map<int, int>{{k, 1}}); }
  // a_k placed at position k, k = 1..l.
  static CuspParam from_window(const PbwExponent& a, int offset = 0);

  int operator[](int k) const;
  bool is_zero() const { return entries_.empty(); }
  const std::map<int, int>& entries() const { return entries_; }
  int total() const;
  int min_index() const { return entries_.begin()->first; }
  int max_index() const { return entries_.rbegin()->first; }

  CuspParam operator+(const CuspParam& o) const;

  // Sparse "k:a_k" list, increasing k, comma separated; "" for zero.
  std::string to_string() const;
  static CuspParam parse(const std::string& text);

  friend bool operator==(const CuspParam&, const CuspParam&) = default;

 private:
  std::map<int, int> entries_;  // strictly positive values only
};

// Compare at the smallest (left) or largest (right) index where a and b differ.
std::strong_ordering lex_left(const CuspParam& a, const CuspParam& b);
std::strong_ordering lex_right(const CuspParam& a, const CuspParam& b);

enum class Ordering { Less, Greater, Equal, Incomparable };

const char* ordering_name(Ordering o);

// Less iff a is smaller in both one-sided lexicographic comparisons.
Ordering bilex_compare(const CuspParam& a, const CuspParam& b);

}  // namespace cuspkit
