#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "cuspkit/laurent.hpp"
#include "cuspkit/shuffle.hpp"

namespace cuspkit {

// Expresses shuffle elements as Z[q,q^-1]-combinations of a fixed family of linearly
// independent elements.
//
// Two routes. If the family has pairwise distinct leading words, the family is triangular with
// respect to those pivots and solutions come from back-substitution on leading words. Otherwise
// pivot rows are picked by a rank computation modulo a prime at a random-looking value of q, the
// square system is solved exactly by fraction-free elimination, and every solution is checked
// against all words.
class SpanSolver {
 public:
  enum class Route { LeadingWord, Elimination };

  // Throws InvariantViolation when the family is linearly dependent.
  explicit SpanSolver(std::vector<ShuffleElt> basis);
  SpanSolver(std::vector<ShuffleElt> basis, Route route);

  Route route() const { return route_; }
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<ShuffleElt>& basis() const { return basis_; }

  // Coefficients in basis order. Throws DomainError when x is not an integral combination.
  std::vector<LaurentPoly> solve(const ShuffleElt& x) const;

  static bool leading_words_distinct(const std::vector<ShuffleElt>& family);

 private:
  void prepare_leading_word();
  void prepare_elimination();
  std::vector<LaurentPoly> solve_leading_word(const ShuffleElt& x) const;
  std::vector<LaurentPoly> solve_elimination(const ShuffleElt& x) const;

  std::vector<ShuffleElt> basis_;
  Route route_;

  // LeadingWord route: basis index per leading word.
  std::map<Word, std::size_t> pivot_of_;

  // Elimination route: chosen pivot words (one per unknown) and the recorded fraction-free
  // elimination: after step k, row i (i > k) was replaced by
  // (pivot[k] * row_i - multiplier[k][i] * row_k) / pivot[k-1].
  std::vector<Word> rows_;
  std::vector<std::size_t> swap_with_;
  std::vector<std::vector<LaurentPoly>> upper_;
  std::vector<LaurentPoly> pivots_;
  std::vector<std::vector<LaurentPoly>> multipliers_;
};

}  // namespace cuspkit
