#include "cuspkit/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <set>

#include "cuspkit/affine.hpp"
#include "cuspkit/errors.hpp"
#include "cuspkit/gbasis.hpp"
#include "cuspkit/invariants.hpp"
#include "cuspkit/qdata.hpp"

namespace cuspkit {

namespace {

constexpr std::size_t kMaxListedFailures = 20;

class Sweep {
 public:
  explicit Sweep(std::string name) : start_(std::chrono::steady_clock::now()) { r_.name = std::move(name); }

  void fail(const std::string& msg) {
    ++failures_;
    if (r_.failures.size() < kMaxListedFailures) r_.failures.push_back(msg);
  }
  void check(bool ok, const std::string& msg) {
    ++checks_;
    if (!ok) fail(msg);
  }
  void note(const std::string& s) {
    if (!r_.summary.empty()) r_.summary += "; ";
    r_.summary += s;
  }
  SweepResult finish() {
    r_.passed = failures_ == 0;
    note(std::to_string(checks_) + " checks, " + std::to_string(failures_) + " failures");
    r_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return r_;
  }
  SweepResult skip(const std::string& why) {
    r_.skipped = true;
    r_.passed = true;
    note("skipped: " + why);
    r_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return r_;
  }

 private:
  SweepResult r_;
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::chrono::steady_clock::time_point start_;
};

std::vector<CartanDatum> families(const VerifyOptions& o, std::initializer_list<const char*> defaults) {
  if (o.cartan) return {*o.cartan};
  std::vector<CartanDatum> out;
  for (const char* s : defaults) out.push_back(parse_cartan(s));
  return out;
}

void exponents_up_to(std::size_t l, int total, std::vector<PbwExponent>& out) {
  std::vector<int> a(l, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t k, int left) {
    if (k == l) {
      if (left == 0) out.emplace_back(a);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      a[k] = v;
      rec(k + 1, left - v);
    }
    a[k] = 0;
  };
  rec(0, total);
}

std::string set_key(const GlobalWeightSpace& gs) {
  std::vector<std::string> parts;
  for (const auto& e : gs.elements) parts.push_back(e.value.to_json().dump());
  std::sort(parts.begin(), parts.end());
  std::string s;
  for (const auto& p : parts) s += p + "|";
  return s;
}

int max_root_height(const RootSystem& rs) {
  int h = 0;
  for (const RootVec& r : rs.positive_roots()) h = std::max(h, r.height());
  return h;
}

}  // namespace

nlohmann::json SweepResult::to_json(bool with_timing) const {
  nlohmann::json j = {{"name", name}, {"passed", passed}, {"skipped", skipped}, {"summary", summary}, {"failures", failures}};
  if (with_timing) j["seconds"] = seconds;
  return j;
}

std::vector<RootVec> weights_up_to(int rank, int bound) {
  std::vector<RootVec> out;
  RootVec v = RootVec::zero(rank);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i > rank) {
      if (!v.is_zero()) out.push_back(v);
      return;
    }
    for (int c = 0; c <= left; ++c) {
      v[i] = c;
      rec(i + 1, left - c);
    }
    v[i] = 0;
  };
  rec(1, bound);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

long long kostant_count(const RootSystem& rs, const RootVec& mu) {
  // ways[v] over the box 0 <= v <= mu, adding one root type at a time.
  std::map<RootVec, long long> ways;
  std::vector<RootVec> box;
  std::function<void(int, RootVec&)> rec = [&](int i, RootVec& v) {
    if (i > mu.rank()) {
      box.push_back(v);
      return;
    }
    for (int c = 0; c <= mu[i]; ++c) {
      v[i] = c;
      rec(i + 1, v);
    }
    v[i] = 0;
  };
  RootVec v = RootVec::zero(mu.rank());
  rec(1, v);
  std::sort(box.begin(), box.end(), canonical_less);
  for (const RootVec& b : box) ways[b] = b.is_zero() ? 1 : 0;
  for (const RootVec& root : rs.positive_roots()) {
    for (const RootVec& b : box) {
      RootVec prev = b - root;
      if (prev.is_nonnegative()) ways[b] += ways[prev];
    }
  }
  return ways[mu];
}

std::vector<ReducedWord> words_for_sweep(const RootSystem& rs, std::size_t cap, std::size_t samples, std::uint64_t seed) {
  WordEnumeration e = enumerate_reduced_words(rs, cap);
  if (!e.truncated) return e.words;
  std::mt19937_64 rng(seed);
  std::set<ReducedWord> chosen;
  std::vector<ReducedWord> out;
  std::size_t attempts = 0;
  while (out.size() < samples && attempts++ < samples * 100) {
    ReducedWord w = random_reduced_word(rs, rng);
    if (chosen.insert(w).second) out.push_back(w);
  }
  return out;
}

SweepResult sweep_convexity(const VerifyOptions& o) {
  Sweep s("convexity");
  for (const CartanDatum& c : families(o, {"A2", "A3", "D4"})) {
    RootSystem rs = build_root_system(c);
    std::size_t cap = o.cartan ? o.word_cap : (c.series() == Series::D ? 0 : o.word_cap);
    std::vector<ReducedWord> words = cap ? words_for_sweep(rs, cap, o.sampled_words, o.seed)
                                         : words_for_sweep(rs, 1, o.sampled_words, o.seed);
    std::set<RootVec> all(rs.positive_roots().begin(), rs.positive_roots().end());
    for (const ReducedWord& w : words) {
      ConvexSeq seq = beta_sequence(rs, w);
      std::set<RootVec> got(seq.betas.begin(), seq.betas.end());
      s.check(seq.size() == rs.num_positive() && got == all, c.name() + " " + w.to_string() + ": not a bijection");
      s.check(convexity_check(rs, seq.betas), c.name() + " " + w.to_string() + ": not convex");
    }
    s.note(c.name() + ": " + std::to_string(words.size()) + " words");
  }
  return s.finish();
}

SweepResult sweep_pbw_basis(const VerifyOptions& o) {
  Sweep s("pbw_basis");
  for (const CartanDatum& c : families(o, {"A2", "A3"})) {
    RootSystem rs = build_root_system(c);
    ReducedWord w = enumerate_reduced_words(rs, 1).words.front();
    PbwContext ctx(rs, w, o.height_bound);
    std::size_t spaces = 0;
    for (const RootVec& mu : weights_up_to(c.rank(), o.height_bound)) {
      const PbwWeightSpace& ws = ctx.weight_space(mu);
      ++spaces;
      s.check(static_cast<long long>(ws.exponents.size()) == kostant_count(rs, mu),
              c.name() + " " + mu.to_string() + ": monomial count differs from the Kostant count");
      std::set<Word> leads;
      for (const PbwBasisElt& m : ws.monomials) leads.insert(m.leading_word);
      s.check(leads.size() == ws.monomials.size(), c.name() + " " + mu.to_string() + ": repeated leading words");
      for (const PbwBasisElt& m : ws.monomials) {
        auto e = ctx.expand_in_pbw(m.value);
        s.check(e.size() == 1 && e.begin()->first == m.exponent && e.begin()->second == LaurentPoly(1),
                c.name() + " " + m.exponent.to_string() + ": expansion is not the identity");
      }
    }
    s.note(c.name() + ": " + std::to_string(spaces) + " weight spaces");
  }
  return s.finish();
}

SweepResult sweep_global_basis(const VerifyOptions& o) {
  Sweep s("global_basis");
  for (const CartanDatum& c : families(o, {"A2", "A3"})) {
    RootSystem rs = build_root_system(c);
    std::vector<ReducedWord> words = words_for_sweep(rs, std::min<std::size_t>(o.word_cap, 24), 8, o.seed);
    std::vector<RootVec> weights = weights_up_to(c.rank(), o.height_bound);
    std::map<RootVec, std::string> reference;
    for (const ReducedWord& w : words) {
      GlobalBasis gb(rs, w, o.height_bound);
      for (const RootVec& mu : weights) {
        const GlobalWeightSpace& gs = gb.at_weight(mu);
        for (std::size_t r = 0; r < gs.elements.size(); ++r) {
          const auto& g = gs.elements[r];
          s.check(g.value.conjugated() == g.value, c.name() + " " + w.to_string() + " " + g.exponent.to_string() + ": not bar-invariant");
          s.check(gs.global_to_pbw[r][r] == LaurentPoly(1), c.name() + " " + g.exponent.to_string() + ": diagonal is not 1");
          for (std::size_t t = 0; t < gs.elements.size(); ++t) {
            if (t == r || gs.global_to_pbw[r][t].is_zero()) continue;
            s.check(gs.global_to_pbw[r][t].min_exponent() >= 1,
                    c.name() + " " + g.exponent.to_string() + ": off-diagonal coefficient outside qZ[q]");
          }
        }
        std::string key = set_key(gs);
        auto [it, fresh] = reference.emplace(mu, key);
        if (!fresh) s.check(it->second == key, c.name() + " " + mu.to_string() + ": basis differs for word " + w.to_string());
      }
    }
    s.note(c.name() + ": " + std::to_string(words.size()) + " words x " + std::to_string(weights.size()) + " weights");
  }
  return s.finish();
}

SweepResult sweep_unitriangularity(const VerifyOptions& o) {
  Sweep s("unitriangularity");
  for (const CartanDatum& c : families(o, {"A2", "A3"})) {
    RootSystem rs = build_root_system(c);
    std::size_t l = rs.num_positive();
    int total = l <= 3 ? 4 : (l <= 6 ? 3 : 2);
    ReducedWord w = enumerate_reduced_words(rs, 1).words.front();
    GlobalBasis gb(rs, w, total * max_root_height(rs));
    std::vector<PbwExponent> exps;
    for (int t = 1; t <= total; ++t) exponents_up_to(l, t, exps);
    for (const PbwExponent& a : exps) {
      UnitriangularityReport rep = gb.unitriangularity_report(a);
      s.check(rep.passed(), c.name() + " " + a.to_string() + ": " + (rep.failures.empty() ? std::string("failed") : rep.failures.front()));
    }
    s.note(c.name() + ": " + std::to_string(exps.size()) + " parameters with |a| <= " + std::to_string(total));
  }
  return s.finish();
}

SweepResult sweep_strong_datum(const VerifyOptions& o) {
  Sweep s("strong_datum");
  for (const CartanDatum& c : families(o, {"A2", "A3", "A4", "D4"})) {
    if (c.series() == Series::E) return s.skip("no denominator tables for " + c.name());
    RootSystem rs = build_root_system(c);
    AffineData ad(rs);
    const int h = ad.coxeter();
    std::vector<QData> all = enumerate_qdata(c);
    for (const QData& q : all) {
      CoordinateBijection bij = root_coordinate_bijection(ar_quiver(q, rs));
      std::vector<FundLabel> labels;
      for (int i = 1; i <= c.rank(); ++i) labels.push_back(bij.simple(i, c.rank()));
      StrongDatumReport rep = strong_datum_check(ad, labels, c);
      s.check(rep.passed(), c.name() + " " + q.quiver.to_string() + ": " + (rep.failures.empty() ? std::string("failed") : rep.failures.front()));
      for (const auto& [root, label] : bij.to_label) s.check(in_c0(c, label), c.name() + ": label " + label.to_string() + " outside C0");
    }
    for (int i = 1; i <= c.rank(); ++i)
      for (int p = -2 * h; p <= 2 * h; ++p) {
        FundLabel x{i, p};
        if (!in_c0(c, x)) continue;
        s.check(root_module_check(ad, x), c.name() + " " + x.to_string() + ": not a root module");
        s.check(root_module_check(ad, x, 3 * h), c.name() + " " + x.to_string() + ": fails the 3h scan");
      }
    s.note(c.name() + ": " + std::to_string(all.size()) + " Q-data");
  }
  return s.finish();
}

SweepResult sweep_unmixed(const VerifyOptions& o) {
  Sweep s("unmixed");
  for (const CartanDatum& c : families(o, {"A2", "A3", "A4", "D4"})) {
    if (c.series() == Series::E) return s.skip("no denominator tables for " + c.name());
    RootSystem rs = build_root_system(c);
    AffineData ad(rs);
    const int l = static_cast<int>(rs.num_positive());
    std::size_t lines = 0;
    for (const QData& q : enumerate_qdata(c)) {
      ReducedWord w = adapted_word(rs, q.quiver);
      s.check(is_adapted(w, q.quiver), c.name() + " " + q.quiver.to_string() + ": constructed word is not adapted");
      CuspLine line = cuspidal_line(q, rs, w, 1 - l, 2 * l);
      ++lines;
      s.check(unmixed_check(ad, line), c.name() + " " + q.quiver.to_string() + " " + w.to_string() + ": mixed pair");
      for (int k = line.kmin; k + l <= line.kmax; ++k)
        s.check(line.labels.at(k + l) == ad.dshift(line.labels.at(k)), c.name() + ": labels not D-periodic at k = " + std::to_string(k));
    }
    s.note(c.name() + ": " + std::to_string(lines) + " adapted lines");
  }
  return s.finish();
}

SweepResult sweep_parameterization(const VerifyOptions& o) {
  Sweep s("parameterization");
  for (const CartanDatum& c : families(o, {"A2"})) {
    RootSystem rs = build_root_system(c);
    ReducedWord w = enumerate_reduced_words(rs, 1).words.front();
    GlobalBasis gb(rs, w, o.height_bound);
    std::size_t count = 0;
    for (const RootVec& mu : weights_up_to(c.rank(), o.height_bound)) {
      const GlobalWeightSpace& gs = gb.at_weight(mu);
      std::set<PbwExponent> heads;
      for (const PbwExponent& a : gs.exponents) {
        auto e = gb.expand(gb.pbw().dual_pbw_monomial(a).value);
        std::vector<PbwExponent> top;
        for (const auto& [b, coeff] : e) {
          bool dominated = false;
          for (const auto& [d, coeff2] : e)
            if (bilex_compare(CuspParam::from_window(b), CuspParam::from_window(d)) == Ordering::Less) dominated = true;
          if (!dominated) top.push_back(b);
        }
        if (top.size() != 1) {
          s.fail(c.name() + " " + a.to_string() + ": head is not unique");
          continue;
        }
        heads.insert(top.front());
        s.check(gb.cuspidal_decomposition_window(gb.element(top.front()).value) == a,
                c.name() + " " + a.to_string() + ": cuspidal decomposition of the head differs");
        ++count;
      }
      s.check(heads == std::set<PbwExponent>(gs.exponents.begin(), gs.exponents.end()),
              c.name() + " " + mu.to_string() + ": heads do not cover the global labels");
    }
    s.note(c.name() + ": " + std::to_string(count) + " parameters");
  }
  return s.finish();
}

SweepResult sweep_invariants(const VerifyOptions& o) {
  Sweep s("invariants");
  constexpr int kPairHeight = 4;
  for (const CartanDatum& c : families(o, {"A2", "A3"})) {
    RootSystem rs = build_root_system(c);
    ReducedWord w = enumerate_reduced_words(rs, 1).words.front();
    GlobalBasis gb(rs, w, 2 * kPairHeight);
    std::vector<PbwExponent> labels;
    for (const RootVec& mu : weights_up_to(c.rank(), kPairHeight))
      for (const PbwExponent& a : gb.at_weight(mu).exponents) labels.push_back(a);
    std::size_t defined = 0, undefined = 0;
    for (const PbwExponent& x : labels) {
      for (const PbwExponent& y : labels) {
        PairInvariants pi = pair_invariants(gb, x, y);
        std::string tag = c.name() + " " + x.to_string() + "," + y.to_string();
        if (!pi.lambda_xy || !pi.lambda_yx) {
          ++undefined;
          continue;
        }
        ++defined;
        s.check(*pi.delta >= 0, tag + ": negative delta");
        s.check((*pi.delta == 0) == pi.commute.commutes, tag + ": delta = 0 disagrees with commutation");
        if (pi.commute.commutes) s.check(*pi.lambda_xy == -*pi.lambda_yx, tag + ": lambda not antisymmetric");
        s.check(((*pi.lambda_xy - pi.wt_pair) % 2 + 2) % 2 == 0, tag + ": lambda parity");
      }
    }
    const std::size_t l = rs.num_positive();
    const ConvexSeq& seq = gb.pbw().sequence();
    for (int i = 1; i <= c.rank(); ++i)
      for (int j = 1; j <= c.rank(); ++j) {
        if (i == j) continue;
        PbwExponent x = PbwExponent::unit(l, *seq.position(RootVec::simple(c.rank(), i)));
        PbwExponent y = PbwExponent::unit(l, *seq.position(RootVec::simple(c.rank(), j)));
        auto d = delta_pair(gb, x, y);
        s.check(d && *d == -c.entry(i, j), c.name() + ": delta((" + std::to_string(i) + "),(" + std::to_string(j) + ")) != -c_ij");
      }
    s.note(c.name() + ": " + std::to_string(defined) + " defined pairs, " + std::to_string(undefined) + " undefined");
  }
  return s.finish();
}

SweepResult sweep_bilex_order(const VerifyOptions& o) {
  Sweep s("bilex_order");
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<int> value(0, 1);
  auto random_param = [&]() {
    std::map<int, int> m;
    for (int k = 0; k < 8; ++k) m[k] = value(rng);
    return CuspParam(m);
  };
  std::size_t less_pairs = 0;
  for (std::size_t t = 0; t < o.order_triples; ++t) {
    CuspParam a = random_param(), b = random_param(), c = random_param();
    s.check(bilex_compare(a, a) == Ordering::Equal, "reflexive case " + a.to_string());
    Ordering ab = bilex_compare(a, b), ba = bilex_compare(b, a), bc = bilex_compare(b, c), ac = bilex_compare(a, c);
    if (ab == Ordering::Less) {
      ++less_pairs;
      s.check(ba == Ordering::Greater, "antisymmetry " + a.to_string() + " / " + b.to_string());
      s.check(lex_left(a, b) < 0 && lex_right(a, b) < 0, "one-sided orders " + a.to_string() + " / " + b.to_string());
      if (bc == Ordering::Less) s.check(ac == Ordering::Less, "transitivity " + a.to_string() + " / " + b.to_string() + " / " + c.to_string());
    }
    if (ab == Ordering::Equal) s.check(a == b, "equality " + a.to_string());
  }
  s.note(std::to_string(o.order_triples) + " triples, " + std::to_string(less_pairs) + " comparable pairs");
  return s.finish();
}

std::vector<SweepResult> run_verify(const VerifyOptions& o) {
  return {sweep_convexity(o),   sweep_pbw_basis(o), sweep_global_basis(o),     sweep_unitriangularity(o), sweep_strong_datum(o),
          sweep_unmixed(o),     sweep_parameterization(o), sweep_invariants(o), sweep_bilex_order(o)};
}

}  // namespace cuspkit
