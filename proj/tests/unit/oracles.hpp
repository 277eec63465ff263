#pragma once

// Reference implementations used only by the tests. Each one takes a different route than the
// library code it checks.

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "cuspkit/gbasis.hpp"
#include "cuspkit/laurent.hpp"
#include "cuspkit/liecore.hpp"
#include "cuspkit/pbw.hpp"
#include "cuspkit/qdata.hpp"
#include "cuspkit/shuffle.hpp"

namespace oracle {

using namespace cuspkit;

// Word shuffle by enumerating the position sets of the left factor; every (left letter a,
// right letter b) pair with b placed before a contributes -(alpha_a, alpha_b).
inline ShuffleElt shuffle_by_positions(const CartanDatum& c, const Word& u, const Word& v) {
  const std::size_t m = u.size(), n = v.size();
  ShuffleElt out;
  std::vector<bool> mask(m + n, false);
  std::fill(mask.begin(), mask.begin() + static_cast<long>(m), true);
  std::sort(mask.begin(), mask.end());
  do {
    Word w;
    std::vector<int> which(m + n);
    std::size_t iu = 0, iv = 0;
    int exponent = 0;
    std::vector<int> placed_v;
    std::vector<std::pair<int, bool>> seq;
    for (std::size_t t = 0; t < m + n; ++t) {
      if (mask[t]) seq.push_back({u[iu++], true});
      else seq.push_back({v[iv++], false});
    }
    for (std::size_t s = 0; s < seq.size(); ++s) {
      w.push_back(seq[s].first);
      if (!seq[s].second) continue;
      for (std::size_t r = 0; r < s; ++r)
        if (!seq[r].second) exponent -= c.entry(seq[s].first, seq[r].first);
    }
    out.add(w, LaurentPoly::q(exponent));
  } while (std::next_permutation(mask.begin(), mask.end()));
  return out;
}

inline ShuffleElt shuffle_elements(const CartanDatum& c, const ShuffleElt& x, const ShuffleElt& y) {
  ShuffleElt out;
  for (const auto& [u, cu] : x.terms())
    for (const auto& [v, cv] : y.terms()) {
      ShuffleElt p = shuffle_by_positions(c, u, v);
      for (const auto& [w, e] : p.terms()) out.add(w, cu * cv * e);
    }
  return out;
}

// Reflections as integer matrices acting on simple-root coordinates.
using Mat = std::vector<std::vector<int>>;

inline Mat reflection_matrix(const CartanDatum& c, int i) {
  const int n = c.rank();
  Mat m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int r = 0; r < n; ++r) m[r][r] = 1;
  // r_i(alpha_j) = alpha_j - c_{ij} alpha_i: column j gets -c_{ij} in row i.
  for (int j = 1; j <= n; ++j) m[i - 1][j - 1] -= c.entry(i, j);
  return m;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
  const std::size_t n = a.size();
  Mat r(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
  return r;
}

inline RootVec act(const Mat& m, const RootVec& v) {
  RootVec out = RootVec::zero(v.rank());
  for (int i = 0; i < v.rank(); ++i)
    for (int j = 0; j < v.rank(); ++j) out.coords[i] += m[i][j] * v.coords[j];
  return out;
}

inline std::vector<RootVec> betas_by_matrices(const CartanDatum& c, const std::vector<int>& word) {
  const int n = c.rank();
  Mat acc(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int r = 0; r < n; ++r) acc[r][r] = 1;
  std::vector<RootVec> out;
  for (int i : word) {
    out.push_back(act(acc, RootVec::simple(n, i)));
    acc = mat_mul(acc, reflection_matrix(c, i));
  }
  return out;
}

// Reduced words of the longest permutation in S_{n+1} by adjacent swaps that create an inversion.
inline std::size_t count_reduced_words_type_a(int n) {
  std::map<std::vector<int>, std::size_t> memo;
  std::function<std::size_t(std::vector<int>&)> rec = [&](std::vector<int>& perm) -> std::size_t {
    bool longest = true;
    for (int k = 0; k < n; ++k)
      if (perm[k] < perm[k + 1]) longest = false;
    if (longest) return 1;
    auto it = memo.find(perm);
    if (it != memo.end()) return it->second;
    std::size_t total = 0;
    for (int k = 0; k < n; ++k)
      if (perm[k] < perm[k + 1]) {
        std::swap(perm[k], perm[k + 1]);
        total += rec(perm);
        std::swap(perm[k], perm[k + 1]);
      }
    memo[perm] = total;
    return total;
  };
  std::vector<int> id(static_cast<std::size_t>(n + 1));
  std::iota(id.begin(), id.end(), 0);
  return rec(id);
}

// Standard Young tableaux of the staircase (n, n-1, ..., 1) by the hook length formula.
inline std::size_t staircase_syt(int n) {
  int cells = n * (n + 1) / 2;
  long double num = 1;
  for (int k = 2; k <= cells; ++k) num *= k;
  long double hooks = 1;
  for (int row = 0; row < n; ++row)
    for (int col = 0; col < n - row; ++col) {
      int arm = n - row - col - 1;
      int leg = n - col - row - 1;
      hooks *= arm + leg + 1;
    }
  return static_cast<std::size_t>(num / hooks + 0.5L);
}

// Multisets of positive roots summing to mu, by direct recursion over the root list.
inline long long kostant_brute(const std::vector<RootVec>& roots, const RootVec& mu, std::size_t from = 0) {
  if (mu.is_zero()) return 1;
  long long total = 0;
  for (std::size_t k = from; k < roots.size(); ++k) {
    RootVec rest = mu - roots[k];
    if (rest.is_nonnegative()) total += kostant_brute(roots, rest, k);
  }
  return total;
}

// AR coordinates by repeated sink reflection: the k-th letter i_k of an adapted word sits at
// (i_k, current height of i_k), after which that height goes up by 2.
inline std::map<RootVec, VertexLabel> coordinates_by_reflection(const QData& q, const std::vector<int>& word) {
  std::map<RootVec, VertexLabel> out;
  std::vector<int> phi = q.phi;
  auto betas = betas_by_matrices(q.cartan, word);
  for (std::size_t k = 0; k < word.size(); ++k) {
    int i = word[k];
    out[betas[k]] = VertexLabel{i, phi[static_cast<std::size_t>(i - 1)]};
    phi[static_cast<std::size_t>(i - 1)] += 2;
  }
  return out;
}

// Every adapted word of the quiver, by trying each sink at each step.
inline std::vector<std::vector<int>> all_adapted_words(const DynkinQuiver& q, int rank, std::size_t length, std::size_t cap) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(const DynkinQuiver&)> rec = [&](const DynkinQuiver& quiver) {
    if (out.size() >= cap) return;
    if (cur.size() == length) {
      out.push_back(cur);
      return;
    }
    for (int i = 1; i <= rank; ++i) {
      bool sink = true;
      for (const auto& [s, t] : quiver.arrows)
        if (s == i) sink = false;
      if (!sink) continue;
      DynkinQuiver next;
      for (const auto& [s, t] : quiver.arrows) next.arrows.push_back(s == i || t == i ? std::make_pair(t, s) : std::make_pair(s, t));
      cur.push_back(i);
      rec(next);
      cur.pop_back();
    }
  };
  rec(q);
  return out;
}

// Denominator zeros of type A_n from the closed formula, and delta of two labels from them.
inline std::vector<int> type_a_zeros(int n, int i, int j) {
  std::vector<int> out;
  for (int s = 1; s <= std::min({i, j, n + 1 - i, n + 1 - j}); ++s) out.push_back(std::abs(i - j) + 2 * s);
  return out;
}

inline int type_a_delta(int n, const VertexLabel& x, const VertexLabel& y) {
  auto zx = type_a_zeros(n, x.i, y.i), zy = type_a_zeros(n, y.i, x.i);
  return static_cast<int>(std::count(zx.begin(), zx.end(), y.p - x.p) + std::count(zy.begin(), zy.end(), x.p - y.p));
}

// a below b: smaller at both the leftmost and the rightmost index where they differ.
inline bool bilex_below(const std::map<int, int>& a, const std::map<int, int>& b) {
  std::set<int> keys;
  for (const auto& [k, v] : a) keys.insert(k);
  for (const auto& [k, v] : b) keys.insert(k);
  auto at = [](const std::map<int, int>& m, int k) {
    auto it = m.find(k);
    return it == m.end() ? 0 : it->second;
  };
  std::vector<int> diff;
  for (int k : keys)
    if (at(a, k) != at(b, k)) diff.push_back(k);
  if (diff.empty()) return false;
  return at(a, diff.front()) < at(b, diff.front()) && at(a, diff.back()) < at(b, diff.back());
}

inline bool bilex_below(const PbwExponent& a, const PbwExponent& b) {
  std::map<int, int> ma, mb;
  for (std::size_t k = 1; k <= a.size(); ++k) {
    ma[static_cast<int>(k)] = a[k];
    mb[static_cast<int>(k)] = b[k];
  }
  return bilex_below(ma, mb);
}

// q -> q^-1 on every coefficient, rebuilt monomial by monomial.
inline ShuffleElt coefficientwise_bar(const ShuffleElt& x) {
  ShuffleElt out;
  for (const auto& [w, c] : x.terms())
    for (const auto& [e, v] : c.terms()) out.add(w, LaurentPoly::monomial(v, -e));
  return out;
}

// Lambda recomputed from scratch: expand both products (formed by the position-set oracle) and
// compare the exponents of the unique constituent with the lowest q-power.
inline std::optional<int> lambda_by_expansion(const GlobalBasis& gb, const PbwExponent& x, const PbwExponent& y) {
  const CartanDatum& c = gb.cartan();
  auto xy = gb.expand(shuffle_elements(c, gb.element(x).value, gb.element(y).value));
  auto yx = gb.expand(shuffle_elements(c, gb.element(y).value, gb.element(x).value));
  std::optional<int> low;
  std::vector<PbwExponent> at_low;
  for (const auto& [a, coeff] : xy) {
    int m = coeff.min_exponent();
    if (!low || m < *low) {
      low = m;
      at_low = {a};
    } else if (m == *low) {
      at_low.push_back(a);
    }
  }
  if (at_low.size() != 1) return std::nullopt;
  const LaurentPoly& head = xy.at(at_low.front());
  auto it = yx.find(at_low.front());
  if (!head.is_monomial() || it == yx.end() || !it->second.is_monomial()) return std::nullopt;
  return it->second.min_exponent() - head.min_exponent();
}


}  // namespace oracle
