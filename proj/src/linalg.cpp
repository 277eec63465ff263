#include "cuspkit/linalg.hpp"

#include <array>
#include <cstdint>
#include <set>

#include "cuspkit/errors.hpp"

namespace cuspkit {

namespace {

constexpr std::uint64_t kPrime = 2147483647ULL;  // 2^31 - 1
constexpr std::array<std::uint64_t, 3> kSamplePoints = {48271ULL, 1103515245ULL % kPrime, 69069ULL};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) { return a * b % kPrime; }

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t eval_mod(const LaurentPoly& p, std::uint64_t point) {
  if (p.is_zero()) return 0;
  std::uint64_t inv = powmod(point, kPrime - 2);
  std::uint64_t acc = 0;
  for (const auto& [e, c] : p.terms()) {
    BigInt r = c % BigInt(kPrime);
    if (r < 0) r += kPrime;
    std::uint64_t cm = r.convert_to<std::uint64_t>();
    std::uint64_t pw = e >= 0 ? powmod(point, static_cast<std::uint64_t>(e)) : powmod(inv, static_cast<std::uint64_t>(-e));
    acc = (acc + mulmod(cm, pw)) % kPrime;
  }
  return acc;
}

LaurentPoly exact(const LaurentPoly& num, const LaurentPoly& den) {
  auto q = num.divide_exact(den);
  if (!q) throw InvariantViolation("fraction-free elimination produced an inexact division");
  return *q;
}

}  // namespace

bool SpanSolver::leading_words_distinct(const std::vector<ShuffleElt>& family) {
  std::set<Word> seen;
  for (const ShuffleElt& b : family) {
    if (b.is_zero()) return false;
    if (!seen.insert(b.leading_word()).second) return false;
  }
  return true;
}

SpanSolver::SpanSolver(std::vector<ShuffleElt> basis)
    : SpanSolver(basis, leading_words_distinct(basis) ? Route::LeadingWord : Route::Elimination) {}

SpanSolver::SpanSolver(std::vector<ShuffleElt> basis, Route route) : basis_(std::move(basis)), route_(route) {
  for (const ShuffleElt& b : basis_)
    if (b.is_zero()) throw InvariantViolation("zero vector in a basis family");
  if (route_ == Route::LeadingWord) {
    if (!leading_words_distinct(basis_)) throw InvariantViolation("leading-word route needs distinct leading words");
    prepare_leading_word();
  } else {
    prepare_elimination();
  }
}

void SpanSolver::prepare_leading_word() {
  for (std::size_t j = 0; j < basis_.size(); ++j) pivot_of_[basis_[j].leading_word()] = j;
}

std::vector<LaurentPoly> SpanSolver::solve(const ShuffleElt& x) const {
  return route_ == Route::LeadingWord ? solve_leading_word(x) : solve_elimination(x);
}

std::vector<LaurentPoly> SpanSolver::solve_leading_word(const ShuffleElt& x) const {
  std::vector<LaurentPoly> coeffs(basis_.size());
  ShuffleElt rest = x;
  while (!rest.is_zero()) {
    const Word& w = rest.leading_word();
    auto it = pivot_of_.find(w);
    if (it == pivot_of_.end()) throw DomainError("element is not in the span (word " + w.to_string() + ")");
    const ShuffleElt& b = basis_[it->second];
    auto c = rest.leading_coeff().divide_exact(b.leading_coeff());
    if (!c) throw DomainError("element is not an integral combination of the basis");
    coeffs[it->second] += *c;
    rest -= *c * b;
  }
  return coeffs;
}

void SpanSolver::prepare_elimination() {
  const std::size_t n = basis_.size();
  std::set<Word> support;
  for (const ShuffleElt& b : basis_)
    for (const auto& [w, c] : b.terms()) support.insert(w);
  std::vector<Word> words(support.begin(), support.end());

  // Pick n rows that are independent modulo p at a sample value of q; independence there
  // implies independence over Q(q).
  bool found = false;
  for (std::uint64_t point : kSamplePoints) {
    std::vector<std::vector<std::uint64_t>> echelon;
    std::vector<std::size_t> lead_col;
    rows_.clear();
    for (const Word& w : words) {
      std::vector<std::uint64_t> v(n);
      for (std::size_t j = 0; j < n; ++j) v[j] = eval_mod(basis_[j].coeff(w), point);
      for (std::size_t e = 0; e < echelon.size(); ++e) {
        std::uint64_t f = v[lead_col[e]];
        if (f == 0) continue;
        for (std::size_t j = 0; j < n; ++j) v[j] = (v[j] + kPrime - mulmod(f, echelon[e][j])) % kPrime;
      }
      std::size_t col = 0;
      while (col < n && v[col] == 0) ++col;
      if (col == n) continue;
      std::uint64_t inv = powmod(v[col], kPrime - 2);
      for (auto& t : v) t = mulmod(t, inv);
      echelon.push_back(std::move(v));
      lead_col.push_back(col);
      rows_.push_back(w);
      if (rows_.size() == n) break;
    }
    if (rows_.size() == n) {
      found = true;
      break;
    }
  }
  if (!found) throw InvariantViolation("basis family is linearly dependent (rank deficit)");

  std::vector<std::vector<LaurentPoly>> a(n, std::vector<LaurentPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = basis_[j].coeff(rows_[i]);

  LaurentPoly prev(1);
  multipliers_.assign(n, {});
  swap_with_.assign(n, 0);
  pivots_.clear();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t best = n;
    for (std::size_t r = k; r < n; ++r) {
      if (a[r][k].is_zero()) continue;
      if (best == n || a[r][k].num_terms() < a[best][k].num_terms()) best = r;
    }
    if (best == n) throw InvariantViolation("basis family is linearly dependent (zero pivot)");
    std::swap(a[k], a[best]);
    swap_with_[k] = best;
    const LaurentPoly& p = a[k][k];
    multipliers_[k].assign(n, LaurentPoly());
    for (std::size_t i = k + 1; i < n; ++i) {
      LaurentPoly m = a[i][k];
      multipliers_[k][i] = m;
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = exact(p * a[i][j] - m * a[k][j], prev);
      a[i][k] = LaurentPoly();
    }
    pivots_.push_back(p);
    prev = p;
  }
  upper_ = std::move(a);
}

std::vector<LaurentPoly> SpanSolver::solve_elimination(const ShuffleElt& x) const {
  const std::size_t n = basis_.size();
  std::vector<LaurentPoly> b(n);
  for (std::size_t i = 0; i < n; ++i) b[i] = x.coeff(rows_[i]);
  LaurentPoly prev(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::swap(b[k], b[swap_with_[k]]);
    const LaurentPoly& p = pivots_[k];
    for (std::size_t i = k + 1; i < n; ++i) b[i] = exact(p * b[i] - multipliers_[k][i] * b[k], prev);
    prev = p;
  }
  std::vector<LaurentPoly> c(n);
  for (std::size_t k = n; k-- > 0;) {
    LaurentPoly s = b[k];
    for (std::size_t j = k + 1; j < n; ++j) s -= upper_[k][j] * c[j];
    auto quotient = s.divide_exact(upper_[k][k]);
    if (!quotient) throw DomainError("element is not an integral combination of the basis");
    c[k] = std::move(*quotient);
  }
  ShuffleElt check;
  for (std::size_t j = 0; j < n; ++j) check += c[j] * basis_[j];
  if (check != x) throw DomainError("element is not in the span of the basis");
  return c;
}

}  // namespace cuspkit
