#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include <json.hpp>

#include "cuspkit/cuspparam.hpp"
#include "cuspkit/pbw.hpp"

namespace cuspkit {

struct GlobalBasisElt {
  PbwExponent exponent;
  ShuffleElt value;
};

struct GlobalWeightSpace {
  RootVec weight;
  std::vector<PbwExponent> exponents;  // same order as the PBW weight space
  std::vector<GlobalBasisElt> elements;
  // G(a_r) = sum_s global_to_pbw[r][s] E*(a_s);  E*(a_r) = sum_s pbw_to_global[r][s] G(a_s)
  Matrix global_to_pbw;
  Matrix pbw_to_global;
  // Linear extension of the bi-lex order used for the correction, smallest first.
  std::vector<std::size_t> order;

  std::size_t index_of(const PbwExponent& a) const;
};

struct UnitriangularityReport {
  PbwExponent exponent;
  std::map<PbwExponent, LaurentPoly> expansion;  // E*(a) over the global basis
  bool head_ok = false;      // coefficient of G(a) is exactly 1
  bool lower_ok = false;     // every other label is below a in the bi-lex order
  bool positive_ok = false;  // every coefficient is >= 0 at q = 1
  std::vector<std::string> failures;

  bool passed() const { return head_ok && lower_ok && positive_ok; }
  nlohmann::json to_json() const;
};

// Dual canonical basis: the bar-invariant G(a) = E*(a) + sum_{a' < a} P_{a,a'} E*(a') with
// P_{a,a'} in qZ[q], where < is the bi-lex order on window parameters.
class GlobalBasis {
 public:
  GlobalBasis(const RootSystem& rs, ReducedWord w, int height_bound = 6);

  const PbwContext& pbw() const { return pbw_; }
  const CartanDatum& cartan() const { return pbw_.cartan(); }
  int rank() const { return pbw_.cartan().rank(); }

  // Throws RangeError above the height bound, InvariantViolation when the correction fails.
  const GlobalWeightSpace& at_weight(const RootVec& mu) const;
  const GlobalBasisElt& element(const PbwExponent& a) const;

  std::map<PbwExponent, LaurentPoly> expand(const ShuffleElt& x) const;
  // Leading PBW exponent of a global basis element; DomainError for anything else.
  PbwExponent cuspidal_decomposition_window(const ShuffleElt& x) const;
  UnitriangularityReport unitriangularity_report(const PbwExponent& a) const;

  // exponents, PBW elements, global elements and both transition matrices.
  nlohmann::json weight_space_json(const RootVec& mu) const;

 private:
  GlobalWeightSpace build(const RootVec& mu) const;

  PbwContext pbw_;
  GlobalBasisElt unit_;
  mutable std::recursive_mutex mutex_;
  mutable std::map<RootVec, GlobalWeightSpace> spaces_;
};

nlohmann::json matrix_json(const Matrix& m);

}  // namespace cuspkit
