#include "cuspkit/gbasis.hpp"

#include <algorithm>

#include "cuspkit/errors.hpp"

namespace cuspkit {

namespace {

bool reverse_lex_less(const PbwExponent& a, const PbwExponent& b) {
  return std::lexicographical_compare(a.a.rbegin(), a.a.rend(), b.a.rbegin(), b.a.rend());
}

bool below(const PbwExponent& a, const PbwExponent& b) {
  return bilex_compare(CuspParam::from_window(a), CuspParam::from_window(b)) == Ordering::Less;
}

// Kahn's algorithm over the bi-lex order; among minimal candidates the reverse-lex smallest goes first.
std::vector<std::size_t> linear_extension(const std::vector<PbwExponent>& ex) {
  const std::size_t n = ex.size();
  std::vector<std::size_t> indegree(n, 0);
  std::vector<std::vector<std::size_t>> up(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && below(ex[i], ex[j])) {
        up[i].push_back(j);
        ++indegree[j];
      }
  std::vector<std::size_t> order, ready;
  for (std::size_t i = 0; i < n; ++i)
    if (indegree[i] == 0) ready.push_back(i);
  while (!ready.empty()) {
    auto best = std::min_element(ready.begin(), ready.end(),
                                 [&](std::size_t x, std::size_t y) { return reverse_lex_less(ex[x], ex[y]); });
    std::size_t v = *best;
    ready.erase(best);
    order.push_back(v);
    for (std::size_t u : up[v])
      if (--indegree[u] == 0) ready.push_back(u);
  }
  if (order.size() != n) throw InvariantViolation("bi-lex order has a cycle");
  return order;
}

// Part of f with strictly positive exponents.
LaurentPoly positive_part(const LaurentPoly& f) {
  LaurentPoly p;
  for (const auto& [e, c] : f.terms())
    if (e > 0) p += LaurentPoly::monomial(c, e);
  return p;
}

}  // namespace

std::size_t GlobalWeightSpace::index_of(const PbwExponent& a) const {
  auto it = std::lower_bound(exponents.begin(), exponents.end(), a);
  if (it == exponents.end() || *it != a) throw DomainError("exponent " + a.to_string() + " has another weight");
  return static_cast<std::size_t>(it - exponents.begin());
}

GlobalBasis::GlobalBasis(const RootSystem& rs, ReducedWord w, int height_bound)
    : pbw_(rs, std::move(w), height_bound), unit_{PbwExponent::zero(pbw_.length()), ShuffleElt::unit()} {}

GlobalWeightSpace GlobalBasis::build(const RootVec& mu) const {
  const PbwWeightSpace& ws = pbw_.weight_space(mu);
  const std::size_t n = ws.exponents.size();
  GlobalWeightSpace gs;
  gs.weight = mu;
  gs.exponents = ws.exponents;
  gs.order = linear_extension(ws.exponents);

  const Matrix& bar = ws.bar_transition;
  for (std::size_t r = 0; r < n; ++r) {
    if (bar[r][r] != LaurentPoly(1))
      throw InvariantViolation("bar transition has diagonal " + bar[r][r].pretty() + " at " + ws.exponents[r].to_string());
    for (std::size_t s = 0; s < n; ++s)
      if (s != r && !bar[r][s].is_zero() && !below(ws.exponents[s], ws.exponents[r]))
        throw InvariantViolation("bar transition is not triangular: " + ws.exponents[r].to_string() + " -> " +
                                 ws.exponents[s].to_string());
  }

  Matrix p(n, std::vector<LaurentPoly>(n));
  std::vector<std::size_t> rank_of(n);
  for (std::size_t t = 0; t < n; ++t) rank_of[gs.order[t]] = t;
  for (std::size_t r = 0; r < n; ++r) {
    p[r][r] = 1;
    // Walk down from a = exponents[r] through the linear extension.
    for (std::size_t t = rank_of[r]; t-- > 0;) {
      std::size_t c = gs.order[t];
      LaurentPoly f;
      for (std::size_t u = t + 1; u <= rank_of[r]; ++u) {
        std::size_t b = gs.order[u];
        if (!p[r][b].is_zero() && !bar[b][c].is_zero()) f += p[r][b].bar() * bar[b][c];
      }
      if (f.is_zero()) continue;
      if (f.coeff(0) != 0 || f.bar() != -f)
        throw InvariantViolation("bar-invariant correction is unsolvable at " + ws.exponents[r].to_string());
      p[r][c] = positive_part(f);
      if (!below(ws.exponents[c], ws.exponents[r]))
        throw InvariantViolation("correction term " + ws.exponents[c].to_string() + " is not below " + ws.exponents[r].to_string());
    }
  }

  for (std::size_t r = 0; r < n; ++r) {
    ShuffleElt g;
    for (std::size_t s = 0; s < n; ++s)
      if (!p[r][s].is_zero()) g += p[r][s] * ws.monomials[s].value;
    if (g.conjugated() != g) throw InvariantViolation("global element " + ws.exponents[r].to_string() + " is not bar-invariant");
    gs.elements.push_back(GlobalBasisElt{ws.exponents[r], std::move(g)});
  }

  // Inverse of the unitriangular P, built up the linear extension.
  Matrix inv(n, std::vector<LaurentPoly>(n));
  for (std::size_t t = 0; t < n; ++t) {
    std::size_t r = gs.order[t];
    inv[r][r] = 1;
    for (std::size_t u = 0; u < t; ++u) {
      std::size_t b = gs.order[u];
      if (p[r][b].is_zero()) continue;
      for (std::size_t s = 0; s < n; ++s)
        if (!inv[b][s].is_zero()) inv[r][s] -= p[r][b] * inv[b][s];
    }
  }
  gs.global_to_pbw = std::move(p);
  gs.pbw_to_global = std::move(inv);
  return gs;
}

const GlobalWeightSpace& GlobalBasis::at_weight(const RootVec& mu) const {
  pbw_.check_height(mu);
  std::lock_guard lock(mutex_);
  auto it = spaces_.find(mu);
  if (it != spaces_.end()) return it->second;
  GlobalWeightSpace gs = build(mu);
  return spaces_.emplace(mu, std::move(gs)).first->second;
}

const GlobalBasisElt& GlobalBasis::element(const PbwExponent& a) const {
  if (a.size() != pbw_.length()) throw DomainError("exponent length does not match the convex sequence");
  if (a.is_zero()) return unit_;
  const GlobalWeightSpace& gs = at_weight(a.weight(pbw_.sequence()));
  return gs.elements[gs.index_of(a)];
}

std::map<PbwExponent, LaurentPoly> GlobalBasis::expand(const ShuffleElt& x) const {
  std::map<PbwExponent, LaurentPoly> out;
  if (x.is_zero()) return out;
  auto mu = x.weight(rank());
  if (!mu) throw DomainError("expansion needs a homogeneous element");
  if (mu->is_zero()) return pbw_.expand_in_pbw(x);
  const GlobalWeightSpace& gs = at_weight(*mu);
  auto in_pbw = pbw_.expand_in_pbw(x);
  const std::size_t n = gs.exponents.size();
  std::vector<LaurentPoly> c(n);
  for (const auto& [a, coeff] : in_pbw) {
    std::size_t r = gs.index_of(a);
    for (std::size_t s = 0; s < n; ++s)
      if (!gs.pbw_to_global[r][s].is_zero()) c[s] += coeff * gs.pbw_to_global[r][s];
  }
  for (std::size_t s = 0; s < n; ++s)
    if (!c[s].is_zero()) out[gs.exponents[s]] = c[s];
  return out;
}

PbwExponent GlobalBasis::cuspidal_decomposition_window(const ShuffleElt& x) const {
  auto in_pbw = pbw_.expand_in_pbw(x);
  std::vector<PbwExponent> maximal;
  for (const auto& [a, c] : in_pbw) {
    bool dominated = false;
    for (const auto& [b, d] : in_pbw)
      if (below(a, b)) dominated = true;
    if (!dominated) maximal.push_back(a);
  }
  if (maximal.size() != 1 || in_pbw.at(maximal.front()) != LaurentPoly(1))
    throw DomainError("element has no unitriangular PBW leading term");
  const PbwExponent& a = maximal.front();
  if (a.is_zero()) {
    if (x != ShuffleElt::unit()) throw DomainError("element is not a global basis element");
    return a;
  }
  if (element(a).value != x) throw DomainError("element is not a global basis element");
  return a;
}

UnitriangularityReport GlobalBasis::unitriangularity_report(const PbwExponent& a) const {
  UnitriangularityReport rep;
  rep.exponent = a;
  PbwBasisElt e = pbw_.dual_pbw_monomial(a);
  rep.expansion = expand(e.value);
  auto head = rep.expansion.find(a);
  rep.head_ok = head != rep.expansion.end() && head->second == LaurentPoly(1);
  if (!rep.head_ok)
    rep.failures.push_back("head coefficient " + (head == rep.expansion.end() ? std::string("0") : head->second.pretty()) +
                           " at " + a.to_string());
  rep.lower_ok = true;
  rep.positive_ok = true;
  for (const auto& [b, c] : rep.expansion) {
    if (b != a && !below(b, a)) {
      rep.lower_ok = false;
      rep.failures.push_back(b.to_string() + " is not below " + a.to_string());
    }
    if (c.at_one() < 0) {
      rep.positive_ok = false;
      rep.failures.push_back("coefficient at " + b.to_string() + " is negative at q = 1");
    }
  }
  return rep;
}

nlohmann::json UnitriangularityReport::to_json() const {
  nlohmann::json j;
  j["exponent"] = exponent.to_string();
  nlohmann::json terms = nlohmann::json::object();
  for (const auto& [b, c] : expansion) terms[b.to_string()] = c.to_string();
  j["expansion"] = terms;
  j["head_ok"] = head_ok;
  j["lower_ok"] = lower_ok;
  j["positive_ok"] = positive_ok;
  j["passed"] = passed();
  j["failures"] = failures;
  return j;
}

nlohmann::json matrix_json(const Matrix& m) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& row : m) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& c : row) r.push_back(c.to_string());
    j.push_back(r);
  }
  return j;
}

nlohmann::json GlobalBasis::weight_space_json(const RootVec& mu) const {
  const GlobalWeightSpace& gs = at_weight(mu);
  const PbwWeightSpace& ws = pbw_.weight_space(mu);
  nlohmann::json j;
  j["cartan"] = cartan().name();
  j["word"] = pbw_.word().letters;
  j["weight"] = mu.coords;
  nlohmann::json exps = nlohmann::json::array(), pbw = nlohmann::json::array(), glob = nlohmann::json::array();
  for (std::size_t r = 0; r < gs.exponents.size(); ++r) {
    exps.push_back(gs.exponents[r].to_string());
    pbw.push_back({{"exponent", gs.exponents[r].to_string()},
                   {"leading_word", ws.monomials[r].leading_word.to_string()},
                   {"element", ws.monomials[r].value.to_json()}});
    glob.push_back({{"exponent", gs.exponents[r].to_string()}, {"element", gs.elements[r].value.to_json()}});
  }
  j["exponents"] = exps;
  j["pbw"] = pbw;
  j["global"] = glob;
  j["global_to_pbw"] = matrix_json(gs.global_to_pbw);
  j["pbw_to_global"] = matrix_json(gs.pbw_to_global);
  return j;
}

}  // namespace cuspkit
