#pragma once

#include <compare>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "cuspkit/laurent.hpp"
#include "cuspkit/liecore.hpp"
#include "cuspkit/linalg.hpp"
#include "cuspkit/shuffle.hpp"

namespace cuspkit {

// (a_1, ..., a_l) indexed like the convex sequence.
struct PbwExponent {
  std::vector<int> a;

  PbwExponent() = default;
  explicit PbwExponent(std::vector<int> v) : a(std::move(v)) {}
  static PbwExponent zero(std::size_t l) { return PbwExponent(std::vector<int>(l, 0)); }
  static PbwExponent unit(std::size_t l, std::size_t k);  // e_k, 1-based

  std::size_t size() const { return a.size(); }
  int operator[](std::size_t k) const { return a[k - 1]; }  // 1-based
  int total() const;
  RootVec weight(const ConvexSeq& seq) const;
  bool is_zero() const { return total() == 0; }

  std::string to_string() const;  // "(1,0,1)"
  static PbwExponent parse(const std::string& text);

  friend bool operator==(const PbwExponent&, const PbwExponent&) = default;
  friend auto operator<=>(const PbwExponent&, const PbwExponent&) = default;
};

struct PbwBasisElt {
  PbwExponent exponent;
  ShuffleElt value;
  Word leading_word;
};

using Matrix = std::vector<std::vector<LaurentPoly>>;

struct PbwWeightSpace {
  RootVec weight;
  std::vector<PbwExponent> exponents;  // lexicographic
  std::vector<PbwBasisElt> monomials;  // same order
  std::vector<int> shift;              // q-power put on the ordered product
  // bar(E*(a_r)) = sum_s bar_transition[r][s] E*(a_s)
  Matrix bar_transition;
  std::shared_ptr<const SpanSolver> solver;

  std::size_t index_of(const PbwExponent& a) const;
};

// Dual PBW data attached to one reduced word of w0.
//
// Root vectors: E*(alpha_i) is the letter (i). For non-simple beta_k take the pair
// beta_i + beta_j = beta_k with i < k < j of smallest spread j - i (ties: smaller i). The span of
// E*(beta_j) * E*(beta_i) and E*(beta_i) * E*(beta_j) contains exactly one line of elements all of
// whose words w = w' w'' have wt(w') in the cone of beta_1..beta_k and wt(w'') in the cone of
// beta_k..beta_l; E*(beta_k) is the primitive bar-invariant generator of that line with positive
// coefficients.
//
// Monomials: E*(a) = q^{s(a)} E*(beta_l)^{a_l} ... E*(beta_1)^{a_1}, where each power carries
// q^{a(a-1)/2} (so powers of one root vector are bar-invariant) and s(a) is the unique shift that
// makes the bar transition matrix unitriangular.
class PbwContext {
 public:
  PbwContext(const RootSystem& rs, ReducedWord w, int height_bound = 6);

  const RootSystem& roots() const { return roots_; }
  const CartanDatum& cartan() const { return roots_.cartan(); }
  const ReducedWord& word() const { return word_; }
  const ConvexSeq& sequence() const { return seq_; }
  std::size_t length() const { return seq_.size(); }
  int height_bound() const { return height_bound_; }

  // 1-based.
  const ShuffleElt& dual_root_vector(std::size_t k) const;
  std::pair<std::size_t, std::size_t> minimal_pair(std::size_t k) const;
  bool is_cuspidal_word(std::size_t k, const Word& w) const;

  // All exponents of the given weight (Kostant partitions), lexicographic.
  std::vector<PbwExponent> exponents_of_weight(const RootVec& mu) const;
  // Throws RangeError above the height bound.
  const PbwWeightSpace& weight_space(const RootVec& mu) const;
  PbwBasisElt dual_pbw_monomial(const PbwExponent& a) const;
  // E*(beta_l)^{a_l} ... E*(beta_1)^{a_1} with the per-power normalisation only.
  ShuffleElt ordered_product(const PbwExponent& a) const;

  std::map<PbwExponent, LaurentPoly> expand_in_pbw(const ShuffleElt& x) const;

  // Header row then one row per exponent: exponent, leading word, JSON element.
  std::string dump_tsv(const RootVec& mu) const;

  void check_height(const RootVec& mu) const;

 private:
  bool in_cone(const RootVec& v, std::size_t lo, std::size_t hi) const;
  const ShuffleElt& root_power(std::size_t k, int n) const;
  PbwWeightSpace build_weight_space(const RootVec& mu) const;

  RootSystem roots_;
  ReducedWord word_;
  ConvexSeq seq_;
  int height_bound_;

  mutable std::recursive_mutex mutex_;
  mutable std::vector<std::optional<ShuffleElt>> root_vectors_;
  mutable std::map<std::pair<std::size_t, int>, ShuffleElt> powers_;
  mutable std::map<std::tuple<std::size_t, std::size_t, RootVec>, bool> cone_cache_;
  mutable std::map<RootVec, PbwWeightSpace> spaces_;
};

}  // namespace cuspkit
