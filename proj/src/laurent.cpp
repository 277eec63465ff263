#include "cuspkit/laurent.hpp"

#include <algorithm>
#include <cctype>

#include "cuspkit/errors.hpp"

namespace cuspkit {

LaurentPoly::LaurentPoly(BigInt c) {
  if (c != 0) coeffs_.push_back(std::move(c));
}

LaurentPoly LaurentPoly::monomial(BigInt c, int exponent) {
  LaurentPoly p(std::move(c));
  if (!p.is_zero()) p.low_ = exponent;
  return p;
}

LaurentPoly LaurentPoly::q_integer(int n) {
  LaurentPoly p;
  for (int k = 0; k < n; ++k) p += q(n - 1 - 2 * k);
  return p;
}

LaurentPoly LaurentPoly::q_factorial(int n) {
  LaurentPoly p(1);
  for (int k = 2; k <= n; ++k) p *= q_integer(k);
  return p;
}

void LaurentPoly::trim() {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  std::size_t end = coeffs_.size();
  while (coeffs_[end - 1] == 0) --end;
  if (lead > 0 || end < coeffs_.size()) {
    coeffs_ = std::vector<BigInt>(coeffs_.begin() + static_cast<std::ptrdiff_t>(lead),
                                  coeffs_.begin() + static_cast<std::ptrdiff_t>(end));
    low_ += static_cast<int>(lead);
  }
}

BigInt LaurentPoly::coeff(int exponent) const {
  if (is_zero() || exponent < low_ || exponent > max_exponent()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

std::size_t LaurentPoly::num_terms() const {
  return static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c != 0; }));
}

std::vector<std::pair<int, BigInt>> LaurentPoly::terms() const {
  std::vector<std::pair<int, BigInt>> out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) out.emplace_back(low_ + static_cast<int>(k), coeffs_[k]);
  return out;
}

bool LaurentPoly::is_monomial() const { return coeffs_.size() == 1; }

std::optional<int> LaurentPoly::unit_exponent() const {
  if (coeffs_.size() == 1 && coeffs_[0] == 1) return low_;
  return std::nullopt;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly p;
  if (is_zero()) return p;
  p.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
  p.low_ = -max_exponent();
  return p;
}

LaurentPoly LaurentPoly::shifted(int by) const {
  LaurentPoly p = *this;
  if (!p.is_zero()) p.low_ += by;
  return p;
}

BigInt LaurentPoly::at_one() const {
  BigInt s = 0;
  for (const BigInt& c : coeffs_) s += c;
  return s;
}

BigInt LaurentPoly::content() const {
  BigInt g = 0;
  for (const BigInt& c : coeffs_)
    if (c != 0) g = boost::multiprecision::gcd(g, c);
  return boost::multiprecision::abs(g);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (BigInt& c : p.coeffs_) c = -c;
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int lo = std::min(low_, o.low_);
  int hi = std::max(max_exponent(), o.max_exponent());
  if (lo < low_ || hi > max_exponent()) {
    std::vector<BigInt> grown(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) grown[static_cast<std::size_t>(low_ - lo) + k] = std::move(coeffs_[k]);
    coeffs_ = std::move(grown);
    low_ = lo;
  }
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[static_cast<std::size_t>(o.low_ - low_) + k] += o.coeffs_[k];
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly p;
  if (a.is_zero() || b.is_zero()) return p;
  p.low_ = a.low_ + b.low_;
  p.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) p.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  p.trim();
  return p;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& d) const {
  if (d.is_zero()) throw DomainError("division by the zero polynomial");
  if (is_zero()) return LaurentPoly();
  // Both ends of a trimmed polynomial are nonzero, so as ordinary polynomials (after removing
  // the q-power) neither is divisible by q; long division from the top must terminate exactly.
  if (coeffs_.size() < d.coeffs_.size()) return std::nullopt;
  std::vector<BigInt> rem = coeffs_;
  const std::size_t n = rem.size(), m = d.coeffs_.size();
  std::vector<BigInt> quot(n - m + 1);
  const BigInt& lead = d.coeffs_.back();
  for (std::size_t k = n - m + 1; k-- > 0;) {
    BigInt& top = rem[k + m - 1];
    if (top == 0) continue;
    if (top % lead != 0) return std::nullopt;
    BigInt f = top / lead;
    for (std::size_t j = 0; j < m; ++j) rem[k + j] -= f * d.coeffs_[j];
    quot[k] = std::move(f);
  }
  for (const BigInt& r : rem)
    if (r != 0) return std::nullopt;
  LaurentPoly p;
  p.coeffs_ = std::move(quot);
  p.low_ = low_ - d.low_;
  p.trim();
  return p;
}

LaurentPoly LaurentPoly::divide_by_integer(const BigInt& d) const {
  LaurentPoly p = *this;
  for (BigInt& c : p.coeffs_) {
    if (c % d != 0) throw InvariantViolation("inexact integer division of a Laurent polynomial");
    c /= d;
  }
  return p;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (auto& [e, c] : terms()) {
    if (!s.empty()) s += ',';
    s += "q{" + std::to_string(e) + "}:" + c.str();
  }
  return s;
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
  auto fail = [&] { return ConfigError("malformed Laurent polynomial '" + std::string(text) + "'"); };
  if (text == "0") return LaurentPoly();
  LaurentPoly p;
  std::size_t pos = 0;
  int last = 0;
  bool first = true;
  while (pos < text.size()) {
    if (text.substr(pos, 2) != "q{") throw fail();
    pos += 2;
    std::size_t close = text.find('}', pos);
    if (close == std::string_view::npos || text.substr(close, 2) != "}:") throw fail();
    int e;
    try {
      e = std::stoi(std::string(text.substr(pos, close - pos)));
    } catch (const std::exception&) {
      throw fail();
    }
    pos = close + 2;
    std::size_t comma = text.find(',', pos);
    std::string_view num = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    if (num.empty()) throw fail();
    for (std::size_t k = 0; k < num.size(); ++k)
      if (!(std::isdigit(static_cast<unsigned char>(num[k])) || (k == 0 && num[k] == '-' && num.size() > 1))) throw fail();
    BigInt c{std::string(num)};
    if (c == 0 || (!first && e <= last)) throw fail();  // canonical: increasing, nonzero
    p += monomial(c, e);
    last = e;
    first = false;
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
    if (pos == text.size()) throw fail();
  }
  if (first) throw fail();
  return p;
}

std::string LaurentPoly::pretty() const {
  if (is_zero()) return "0";
  std::string s;
  auto ts = terms();
  for (std::size_t k = ts.size(); k-- > 0;) {
    const auto& [e, c] = ts[k];
    BigInt mag = boost::multiprecision::abs(c);
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (e == 0) {
      s += mag.str();
      continue;
    }
    if (mag != 1) s += mag.str() + "*";
    s += e == 1 ? std::string("q") : "q^" + std::to_string(e);
  }
  return s;
}

namespace {

// Polynomial (not Laurent) arithmetic on coefficient vectors, lowest degree first.
using Dense = std::vector<BigInt>;

void strip(Dense& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

BigInt dense_content(const Dense& a) {
  BigInt g = 0;
  for (const BigInt& c : a) g = boost::multiprecision::gcd(g, c);
  return boost::multiprecision::abs(g);
}

Dense primitive(Dense a) {
  BigInt g = dense_content(a);
  if (g > 1)
    for (BigInt& c : a) c /= g;
  return a;
}

// Pseudo-remainder of a by b (deg a >= deg b).
Dense pseudo_remainder(Dense a, const Dense& b) {
  const BigInt& lb = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    BigInt la = a.back();
    std::size_t shift = a.size() - b.size();
    for (BigInt& c : a) c *= lb;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= la * b[j];
    strip(a);
  }
  return a;
}

}  // namespace

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return LaurentPoly();
  auto to_dense = [](const LaurentPoly& p) {
    Dense d;
    if (p.is_zero()) return d;
    for (int e = p.min_exponent(); e <= p.max_exponent(); ++e) d.push_back(p.coeff(e));
    return d;
  };
  Dense x = to_dense(a), y = to_dense(b);
  BigInt g = boost::multiprecision::gcd(dense_content(x), dense_content(y));
  x = primitive(x);
  y = primitive(y);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    Dense r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.empty() ? r : primitive(std::move(r));
  }
  x = primitive(x);
  if (x.back() < 0)
    for (BigInt& c : x) c = -c;
  LaurentPoly out;
  for (std::size_t k = 0; k < x.size(); ++k) out += LaurentPoly::monomial(x[k] * g, static_cast<int>(k));
  return out;
}

}  // namespace cuspkit
