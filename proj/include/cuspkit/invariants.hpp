#pragma once

#include <optional>

#include <json.hpp>

#include "cuspkit/gbasis.hpp"

namespace cuspkit {

struct CommuteResult {
  bool commutes = false;
  std::optional<int> exponent;              // x * y = q^c G
  std::optional<PbwExponent> product_label;  // label of that G
};

struct PairInvariants {
  PbwExponent x, y;
  std::optional<int> lambda_xy;
  std::optional<int> lambda_yx;
  std::optional<int> delta;
  int wt_pair = 0;
  CommuteResult commute;

  nlohmann::json to_json() const;
};

// Global elements are named by their labels in gb. The products must stay within the height bound.
CommuteResult commutes(const GlobalBasis& gb, const PbwExponent& x, const PbwExponent& y);

// Expand x * y over the global basis. If a single constituent H carries the lowest q-power and its
// coefficient is a monomial q^{m1}, and H occurs in y * x with a monomial coefficient q^{m2},
// the value is m2 - m1. Otherwise undefined.
std::optional<int> lambda_pair(const GlobalBasis& gb, const PbwExponent& x, const PbwExponent& y);

// (lambda(x,y) + lambda(y,x)) / 2 when both are defined.
std::optional<int> delta_pair(const GlobalBasis& gb, const PbwExponent& x, const PbwExponent& y);

PairInvariants pair_invariants(const GlobalBasis& gb, const PbwExponent& x, const PbwExponent& y);

}  // namespace cuspkit
