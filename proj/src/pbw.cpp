#include "cuspkit/pbw.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "cuspkit/errors.hpp"

namespace cuspkit {

PbwExponent PbwExponent::unit(std::size_t l, std::size_t k) {
  PbwExponent e = zero(l);
  e.a[k - 1] = 1;
  return e;
}

int PbwExponent::total() const {
  int s = 0;
  for (int x : a) s += x;
  return s;
}

RootVec PbwExponent::weight(const ConvexSeq& seq) const {
  if (a.size() != seq.size()) throw DomainError("exponent length does not match the convex sequence");
  RootVec w = RootVec::zero(seq.betas.empty() ? 0 : seq.betas.front().rank());
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k]) w += a[k] * seq.betas[k];
  return w;
}

std::string PbwExponent::to_string() const {
  std::string s = "(";
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(a[k]);
  }
  return s + ")";
}

PbwExponent PbwExponent::parse(const std::string& text) {
  std::string body = text;
  if (!body.empty() && (body.front() == '(' || body.front() == '[')) body = body.substr(1);
  if (!body.empty() && (body.back() == ')' || body.back() == ']')) body.pop_back();
  PbwExponent e;
  std::stringstream ss(body);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size() || v < 0) throw ConfigError("");
      e.a.push_back(v);
    } catch (const std::exception&) {
      throw ConfigError("bad exponent '" + text + "'");
    }
  }
  return e;
}

std::size_t PbwWeightSpace::index_of(const PbwExponent& a) const {
  auto it = std::lower_bound(exponents.begin(), exponents.end(), a);
  if (it == exponents.end() || *it != a) throw DomainError("exponent " + a.to_string() + " has another weight");
  return static_cast<std::size_t>(it - exponents.begin());
}

// ---------------------------------------------------------------------------

PbwContext::PbwContext(const RootSystem& rs, ReducedWord w, int height_bound)
    : roots_(rs), word_(std::move(w)), seq_(beta_sequence(rs, word_)), height_bound_(height_bound) {
  if (height_bound < 1) throw ConfigError("height bound must be at least 1");
  root_vectors_.resize(seq_.size());
}

void PbwContext::check_height(const RootVec& mu) const {
  if (mu.height() > height_bound_)
    throw RangeError("weight " + mu.to_string() + " has height " + std::to_string(mu.height()) +
                     " above the configured bound " + std::to_string(height_bound_));
}

std::pair<std::size_t, std::size_t> PbwContext::minimal_pair(std::size_t k) const {
  const std::size_t l = seq_.size();
  std::optional<std::pair<std::size_t, std::size_t>> best;
  for (std::size_t i = 1; i < k; ++i) {
    for (std::size_t j = k + 1; j <= l; ++j) {
      if (seq_[i] + seq_[j] != seq_[k]) continue;
      if (!best || j - i < best->second - best->first) best = std::make_pair(i, j);
    }
  }
  if (!best) throw InvariantViolation("no pair of roots around " + seq_[k].to_string() + " sums to it");
  return *best;
}

bool PbwContext::in_cone(const RootVec& v, std::size_t lo, std::size_t hi) const {
  if (v.is_zero()) return true;
  if (!v.is_nonnegative()) return false;
  auto key = std::make_tuple(lo, hi, v);
  auto it = cone_cache_.find(key);
  if (it != cone_cache_.end()) return it->second;
  bool ok = false;
  for (std::size_t k = lo; k <= hi && !ok; ++k) {
    RootVec rest = v - seq_[k];
    if (rest.is_nonnegative()) ok = in_cone(rest, lo, hi);
  }
  cone_cache_[key] = ok;
  return ok;
}

bool PbwContext::is_cuspidal_word(std::size_t k, const Word& w) const {
  std::lock_guard lock(mutex_);
  const int rank = roots_.rank();
  RootVec prefix = RootVec::zero(rank);
  RootVec total = w.weight(rank);
  for (std::size_t t = 0; t + 1 < w.size(); ++t) {
    prefix[w[t]] += 1;
    if (!in_cone(prefix, 1, k) || !in_cone(total - prefix, k, seq_.size())) return false;
  }
  return true;
}

const ShuffleElt& PbwContext::dual_root_vector(std::size_t k) const {
  if (k < 1 || k > seq_.size()) throw RangeError("root index " + std::to_string(k) + " out of range");
  std::lock_guard lock(mutex_);
  if (root_vectors_[k - 1]) return *root_vectors_[k - 1];
  const CartanDatum& c = cartan();
  const RootVec& beta = seq_[k];
  if (beta.height() == 1) {
    for (int i = 1; i <= c.rank(); ++i)
      if (beta[i] == 1) root_vectors_[k - 1] = ShuffleElt::letter(i);
    return *root_vectors_[k - 1];
  }
  auto [i, j] = minimal_pair(k);
  const ShuffleElt& lower = dual_root_vector(i);
  const ShuffleElt& upper = dual_root_vector(j);
  ShuffleElt standard = shuffle_mul(c, upper, lower);
  ShuffleElt reversed = shuffle_mul(c, lower, upper);

  // A non-cuspidal word pins the combination that cancels the other composition factor.
  std::optional<Word> probe;
  for (const auto& [w, coeff] : standard.terms())
    if (!is_cuspidal_word(k, w)) {
      probe = w;
      break;
    }
  if (!probe) throw InvariantViolation("no non-cuspidal word in the minimal-pair product for " + beta.to_string());
  ShuffleElt x = reversed.coeff(*probe) * standard - standard.coeff(*probe) * reversed;
  if (x.is_zero()) throw InvariantViolation("minimal-pair products are proportional for " + beta.to_string());

  LaurentPoly g;
  for (const auto& [w, coeff] : x.terms()) g = gcd(g, coeff);
  ShuffleElt v;
  for (const auto& [w, coeff] : x.terms()) {
    auto quot = coeff.divide_exact(g);
    if (!quot) throw InvariantViolation("gcd does not divide a coefficient");
    v.add(w, *quot);
  }
  // Now v = +-q^t * (bar-invariant element); the exponent range of any coefficient is centred at t.
  const LaurentPoly& sample = v.terms().begin()->second;
  int twice = sample.min_exponent() + sample.max_exponent();
  if (twice % 2 != 0) throw InvariantViolation("root vector for " + beta.to_string() + " cannot be made bar-invariant");
  v = v.shifted(-twice / 2);
  if (v.leading_coeff().at_one() < 0) v *= LaurentPoly(-1);

  for (const auto& [w, coeff] : v.terms()) {
    if (!is_cuspidal_word(k, w)) throw InvariantViolation("root vector for " + beta.to_string() + " has non-cuspidal word " + w.to_string());
    for (const auto& [e, n] : coeff.terms())
      if (n < 0) throw InvariantViolation("root vector for " + beta.to_string() + " has a negative coefficient");
  }
  if (v.conjugated() != v) throw InvariantViolation("root vector for " + beta.to_string() + " is not bar-invariant");
  root_vectors_[k - 1] = std::move(v);
  return *root_vectors_[k - 1];
}

const ShuffleElt& PbwContext::root_power(std::size_t k, int n) const {
  std::lock_guard lock(mutex_);
  auto key = std::make_pair(k, n);
  auto it = powers_.find(key);
  if (it != powers_.end()) return it->second;
  ShuffleElt p = shuffle_power(cartan(), dual_root_vector(k), n).shifted(n * (n - 1) / 2);
  return powers_.emplace(key, std::move(p)).first->second;
}

ShuffleElt PbwContext::ordered_product(const PbwExponent& a) const {
  if (a.size() != seq_.size()) throw DomainError("exponent length does not match the convex sequence");
  ShuffleElt p = ShuffleElt::unit();
  // Rightmost factor is k = 1; build from the right so k = l ends up leftmost.
  for (std::size_t k = 1; k <= seq_.size(); ++k) {
    if (a[k] == 0) continue;
    p = shuffle_mul(cartan(), root_power(k, a[k]), p);
  }
  return p;
}

std::vector<PbwExponent> PbwContext::exponents_of_weight(const RootVec& mu) const {
  std::vector<PbwExponent> out;
  if (!mu.is_nonnegative()) return out;
  const std::size_t l = seq_.size();
  std::vector<int> a(l, 0);
  std::function<void(std::size_t, const RootVec&)> rec = [&](std::size_t k, const RootVec& rest) {
    if (rest.is_zero()) {
      out.emplace_back(a);
      return;
    }
    if (k > l) return;
    RootVec r = rest;
    int n = 0;
    while (true) {
      rec(k + 1, r);
      r -= seq_[k];
      if (!r.is_nonnegative()) break;
      a[k - 1] = ++n;
    }
    a[k - 1] = 0;
  };
  rec(1, mu);
  std::sort(out.begin(), out.end());
  return out;
}

PbwWeightSpace PbwContext::build_weight_space(const RootVec& mu) const {
  PbwWeightSpace ws;
  ws.weight = mu;
  ws.exponents = exponents_of_weight(mu);
  const std::size_t n = ws.exponents.size();
  if (n == 0) throw DomainError("weight " + mu.to_string() + " is not a sum of positive roots");

  std::vector<ShuffleElt> raw;
  raw.reserve(n);
  for (const PbwExponent& a : ws.exponents) raw.push_back(ordered_product(a));
  SpanSolver raw_solver(raw);

  Matrix raw_bar(n);
  ws.shift.assign(n, 0);
  for (std::size_t r = 0; r < n; ++r) {
    raw_bar[r] = raw_solver.solve(raw[r].conjugated());
    auto e = raw_bar[r][r].unit_exponent();
    if (!e || *e % 2 != 0)
      throw InvariantViolation("bar(E*" + ws.exponents[r].to_string() + ") has diagonal coefficient " + raw_bar[r][r].pretty());
    ws.shift[r] = *e / 2;
  }
  // bar(q^{s_r} P_r) = q^{-s_r} sum_t c_{rt} P_t = sum_t q^{-s_r - s_t} c_{rt} (q^{s_t} P_t)
  ws.bar_transition.assign(n, std::vector<LaurentPoly>(n));
  std::vector<ShuffleElt> normalized;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t t = 0; t < n; ++t)
      ws.bar_transition[r][t] = raw_bar[r][t].shifted(-ws.shift[r] - ws.shift[t]);
    ShuffleElt v = raw[r].shifted(ws.shift[r]);
    Word lw = v.leading_word();
    ws.monomials.push_back(PbwBasisElt{ws.exponents[r], v, lw});
    normalized.push_back(std::move(v));
  }
  ws.solver = std::make_shared<const SpanSolver>(std::move(normalized), raw_solver.route());
  return ws;
}

const PbwWeightSpace& PbwContext::weight_space(const RootVec& mu) const {
  check_height(mu);
  std::lock_guard lock(mutex_);
  auto it = spaces_.find(mu);
  if (it != spaces_.end()) return it->second;
  PbwWeightSpace ws = build_weight_space(mu);
  return spaces_.emplace(mu, std::move(ws)).first->second;
}

PbwBasisElt PbwContext::dual_pbw_monomial(const PbwExponent& a) const {
  if (a.size() != seq_.size()) throw DomainError("exponent length does not match the convex sequence");
  if (a.is_zero()) return PbwBasisElt{a, ShuffleElt::unit(), Word()};
  const PbwWeightSpace& ws = weight_space(a.weight(seq_));
  return ws.monomials[ws.index_of(a)];
}

std::map<PbwExponent, LaurentPoly> PbwContext::expand_in_pbw(const ShuffleElt& x) const {
  std::map<PbwExponent, LaurentPoly> out;
  if (x.is_zero()) return out;
  auto mu = x.weight(roots_.rank());
  if (!mu) throw DomainError("expand_in_pbw needs a homogeneous element");
  if (mu->is_zero()) {
    out[PbwExponent::zero(seq_.size())] = x.coeff(Word());
    return out;
  }
  const PbwWeightSpace& ws = weight_space(*mu);
  std::vector<LaurentPoly> c = ws.solver->solve(x);
  for (std::size_t r = 0; r < c.size(); ++r)
    if (!c[r].is_zero()) out[ws.exponents[r]] = c[r];
  return out;
}

std::string PbwContext::dump_tsv(const RootVec& mu) const {
  std::string s = "exponent\tleading_word\telement\n";
  const PbwWeightSpace& ws = weight_space(mu);
  for (const PbwBasisElt& m : ws.monomials)
    s += m.exponent.to_string() + "\t" + m.leading_word.to_string() + "\t" + m.value.to_json().dump() + "\n";
  return s;
}

}  // namespace cuspkit
