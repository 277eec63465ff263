#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cuspkit/liecore.hpp"

namespace cuspkit {

// One direction per Dynkin edge; arrows are (source, target).
struct DynkinQuiver {
  std::vector<std::pair<int, int>> arrows;

  bool has_arrow(int from, int to) const;
  // Every arrow at i points into i.
  bool is_sink(int i) const;
  // Reverse all arrows at i.
  DynkinQuiver reflected(int i) const;
  std::string to_string() const;  // "2>1,2>3"
  // Throws ConfigError unless the arrows orient each edge of c exactly once.
  static DynkinQuiver parse(const CartanDatum& c, const std::string& text);
  static DynkinQuiver from_arrows(const CartanDatum& c, std::vector<std::pair<int, int>> arrows);
  // All 2^{#edges} orientations, deterministic order.
  static std::vector<DynkinQuiver> all(const CartanDatum& c);
};

struct QData {
  CartanDatum cartan;
  DynkinQuiver quiver;
  std::vector<int> phi;  // phi[i-1]

  int height(int i) const { return phi[static_cast<std::size_t>(i - 1)]; }
  // Height function with phi(1) = base, propagated along arrows.
  static QData with_base(const CartanDatum& c, const DynkinQuiver& q, int base = 0);
  nlohmann::json to_json() const;
};

struct QDataViolation {
  std::string rule;   // "phi(1) odd", "arrow"
  std::string where;  // "1" or "1>2"
  std::string message;
};

std::vector<QDataViolation> validate_qdata(const QData& q);

// Orientations times base heights.
std::vector<QData> enumerate_qdata(const CartanDatum& c, const std::vector<int>& bases = {0, 2, -2});

struct VertexLabel {
  int i = 0;
  int p = 0;

  std::string to_string() const;  // "(1,0)"
  friend bool operator==(const VertexLabel&, const VertexLabel&) = default;
  friend auto operator<=>(const VertexLabel&, const VertexLabel&) = default;
};

// p = d(1,i) mod 2.
bool in_c0(const CartanDatum& c, const VertexLabel& v);

struct ARVertex {
  VertexLabel label;
  RootVec root;
};

struct ARQuiver {
  std::vector<ARVertex> vertices;  // sorted by (p, i)
  std::vector<std::pair<VertexLabel, VertexLabel>> arrows;

  std::optional<RootVec> root_at(const VertexLabel& v) const;
  std::optional<VertexLabel> label_of(const RootVec& r) const;
  nlohmann::json to_json() const;
  // Header "i" then one column per p; cells are roots or ".".
  std::string to_tsv() const;
};

// AR quiver of the Q-data. Row i starts at (i, phi(i)) with the projective of vertex i (sum of
// alpha_k over the vertices k reachable from i) and continues by the mesh rule
// label(i, p+2) = sum_{j ~ i} label(j, p+1) - label(i, p), so tau moves p down by 2.
// A row ends at an injective. Throws DomainError for invalid Q-data, InvariantViolation if the
// labels fail to biject onto the positive roots.
ARQuiver ar_quiver(const QData& q, const RootSystem& rs);

struct CoordinateBijection {
  std::map<RootVec, VertexLabel> to_label;
  std::map<VertexLabel, RootVec> to_root;

  const VertexLabel& simple(int i, int rank) const { return to_label.at(RootVec::simple(rank, i)); }
};

CoordinateBijection root_coordinate_bijection(const ARQuiver& ar);

// Sink convention: each letter is a sink of the quiver reflected at all earlier letters.
bool is_adapted(const ReducedWord& w, const DynkinQuiver& q);
// The adapted word read off the AR quiver by increasing height, smaller index first.
ReducedWord adapted_word(const RootSystem& rs, const DynkinQuiver& q);

// D^k on labels: (i, p) -> (i*, p + h), applied k times (k may be negative).
VertexLabel dshift_label(const InvolutionData& inv, const VertexLabel& v, int k = 1);

}  // namespace cuspkit
