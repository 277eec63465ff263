#include "cuspkit/invariants.hpp"

#include "cuspkit/errors.hpp"

namespace cuspkit {

namespace {

std::map<PbwExponent, LaurentPoly> product_expansion(const GlobalBasis& gb, const PbwExponent& x, const PbwExponent& y) {
  const ShuffleElt& gx = gb.element(x).value;
  const ShuffleElt& gy = gb.element(y).value;
  return gb.expand(shuffle_mul(gb.cartan(), gx, gy));
}

std::optional<int> lambda_from(const std::map<PbwExponent, LaurentPoly>& xy, const std::map<PbwExponent, LaurentPoly>& yx) {
  if (xy.empty()) return std::nullopt;
  std::optional<PbwExponent> head;
  int lowest = 0;
  bool tie = false;
  for (const auto& [a, c] : xy) {
    int e = c.min_exponent();
    if (!head || e < lowest) {
      head = a;
      lowest = e;
      tie = false;
    } else if (e == lowest) {
      tie = true;
    }
  }
  if (tie) return std::nullopt;
  auto m1 = xy.at(*head).unit_exponent();
  auto it = yx.find(*head);
  if (!m1 || it == yx.end()) return std::nullopt;
  auto m2 = it->second.unit_exponent();
  if (!m2) return std::nullopt;
  return *m2 - *m1;
}

CommuteResult commute_from(const std::map<PbwExponent, LaurentPoly>& xy) {
  CommuteResult r;
  if (xy.size() == 1) {
    if (auto e = xy.begin()->second.unit_exponent()) {
      r.commutes = true;
      r.exponent = *e;
      r.product_label = xy.begin()->first;
    }
  }
  return r;
}

}  // namespace

CommuteResult commutes(const GlobalBasis& gb, const PbwExponent& x, const PbwExponent& y) {
  return commute_from(product_expansion(gb, x, y));
}

std::optional<int> lambda_pair(const GlobalBasis& gb, const PbwExponent& x, const PbwExponent& y) {
  return lambda_from(product_expansion(gb, x, y), product_expansion(gb, y, x));
}

std::optional<int> delta_pair(const GlobalBasis& gb, const PbwExponent& x, const PbwExponent& y) {
  auto xy = product_expansion(gb, x, y);
  auto yx = product_expansion(gb, y, x);
  auto l1 = lambda_from(xy, yx);
  auto l2 = lambda_from(yx, xy);
  if (!l1 || !l2) return std::nullopt;
  if ((*l1 + *l2) % 2 != 0) throw InvariantViolation("lambda values of opposite parity");
  return (*l1 + *l2) / 2;
}

PairInvariants pair_invariants(const GlobalBasis& gb, const PbwExponent& x, const PbwExponent& y) {
  PairInvariants pi;
  pi.x = x;
  pi.y = y;
  auto xy = product_expansion(gb, x, y);
  auto yx = product_expansion(gb, y, x);
  pi.lambda_xy = lambda_from(xy, yx);
  pi.lambda_yx = lambda_from(yx, xy);
  if (pi.lambda_xy && pi.lambda_yx) {
    if ((*pi.lambda_xy + *pi.lambda_yx) % 2 != 0) throw InvariantViolation("lambda values of opposite parity");
    pi.delta = (*pi.lambda_xy + *pi.lambda_yx) / 2;
  }
  pi.wt_pair = wt_pair(gb.cartan(), gb.element(x).value, gb.element(y).value);
  pi.commute = commute_from(xy);
  return pi;
}

nlohmann::json PairInvariants::to_json() const {
  auto opt = [](const std::optional<int>& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); };
  nlohmann::json j = {{"x", x.to_string()},
                      {"y", y.to_string()},
                      {"lambda_xy", opt(lambda_xy)},
                      {"lambda_yx", opt(lambda_yx)},
                      {"delta", opt(delta)},
                      {"wt_pair", wt_pair},
                      {"commutes", commute.commutes}};
  j["commute_exponent"] = opt(commute.exponent);
  j["product_label"] = commute.product_label ? nlohmann::json(commute.product_label->to_string()) : nlohmann::json(nullptr);
  return j;
}

}  // namespace cuspkit
