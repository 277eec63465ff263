#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cuspkit/cuspparam.hpp"
#include "cuspkit/liecore.hpp"
#include "cuspkit/qdata.hpp"
#include "cuspkit/shuffle.hpp"

namespace cuspkit {

// (i, p) stands for the fundamental module V(varpi_i) at spectral parameter (-q)^p.
using FundLabel = VertexLabel;

// Exponents e (with multiplicity, sorted) such that (-q)^e is a zero of the denominator d_{i,j}.
// Types A_n and D_n; UnsupportedError otherwise.
std::vector<int> denominator_zeros(const CartanDatum& c, int i, int j);

class AffineData {
 public:
  explicit AffineData(const RootSystem& rs);

  const CartanDatum& cartan() const { return cartan_; }
  const InvolutionData& involution() const { return inv_; }
  int coxeter() const { return inv_.coxeter; }
  const std::vector<int>& zeros(int i, int j) const;

  FundLabel dshift(const FundLabel& x, int k = 1) const { return dshift_label(inv_, x, k); }
  // Order of (p_y - p_x) in the zeros of d_{i_x,i_y} plus order of (p_x - p_y) in the zeros of d_{i_y,i_x}.
  int delta(const FundLabel& x, const FundLabel& y) const;

 private:
  CartanDatum cartan_;
  InvolutionData inv_;
  std::map<std::pair<int, int>, std::vector<int>> table_;
};

int delta_fund(const AffineData& ad, const FundLabel& x, const FundLabel& y);

// delta(x, D^k x) = 1 for k = +-1 and 0 for the other 0 < |k| <= kmax (default h).
bool root_module_check(const AffineData& ad, const FundLabel& x, std::optional<int> kmax = std::nullopt);

struct StrongDatumReport {
  std::vector<FundLabel> labels;
  bool root_modules_ok = true;
  bool pairs_ok = true;
  std::vector<std::vector<int>> recovered;  // 2 on the diagonal, -delta(L_i, L_j) off it
  bool recovered_matches = false;
  std::vector<std::string> failures;

  bool passed() const { return root_modules_ok && pairs_ok && recovered_matches; }
  nlohmann::json to_json() const;
};

// Root-module test for every label and delta(L_i, D^k L_j) = -delta(k = 0) c_{i,j} for i != j, |k| <= h.
StrongDatumReport strong_datum_check(const AffineData& ad, const std::vector<FundLabel>& labels, const CartanDatum& target);

struct ClassRef {
  int window_index = 0;  // 1..l
  int shift = 0;         // k = window_index + shift * l
  ShuffleElt cls;        // E*(beta_{window_index})
};

struct CuspLine {
  QData qdata;
  ReducedWord word;
  bool adapted = false;
  int kmin = 1;
  int kmax = 0;
  int length = 0;
  std::map<int, FundLabel> labels;  // adapted words only
  std::map<int, ClassRef> classes;  // other words

  // Position of k inside the window and the number of D-shifts.
  std::pair<int, int> window_position(int k) const;
  nlohmann::json to_json() const;
};

// S_k for kmin <= k <= kmax. Throws InvalidWordError unless w is a reduced word of w0.
CuspLine cuspidal_line(const QData& q, const RootSystem& rs, const ReducedWord& w, int kmin, int kmax);

// delta(S_j, D S_k) = 0 for all j < k in the line's range. UnsupportedError for lines without labels.
bool unmixed_check(const AffineData& ad, const CuspLine& line);

struct StdFactor {
  int k = 0;
  int multiplicity = 0;
  std::optional<FundLabel> label;
  std::optional<int> window_index;
  int shift = 0;
};

struct StdDescriptor {
  std::vector<StdFactor> factors;  // descending k
  nlohmann::json to_json() const;
};

// Throws RangeError when the support of a leaves the line's range.
StdDescriptor standard_descriptor(const CuspLine& line, const CuspParam& a);

}  // namespace cuspkit
