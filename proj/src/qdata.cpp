#include "cuspkit/qdata.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "cuspkit/errors.hpp"

namespace cuspkit {

bool DynkinQuiver::has_arrow(int from, int to) const {
  return std::find(arrows.begin(), arrows.end(), std::make_pair(from, to)) != arrows.end();
}

bool DynkinQuiver::is_sink(int i) const {
  for (const auto& [s, t] : arrows)
    if (s == i) return false;
  return true;
}

DynkinQuiver DynkinQuiver::reflected(int i) const {
  DynkinQuiver q;
  for (const auto& [s, t] : arrows) q.arrows.push_back(s == i || t == i ? std::make_pair(t, s) : std::make_pair(s, t));
  return q;
}

std::string DynkinQuiver::to_string() const {
  std::string s;
  for (const auto& [a, b] : arrows) {
    if (!s.empty()) s += ',';
    s += std::to_string(a) + ">" + std::to_string(b);
  }
  return s;
}

DynkinQuiver DynkinQuiver::from_arrows(const CartanDatum& c, std::vector<std::pair<int, int>> arrows) {
  std::set<std::pair<int, int>> edges;
  for (const auto& [s, t] : arrows) {
    if (s < 1 || t < 1 || s > c.rank() || t > c.rank() || c.entry(s, t) != -1)
      throw ConfigError("arrow " + std::to_string(s) + ">" + std::to_string(t) + " is not an edge of " + c.name());
    if (!edges.insert({std::min(s, t), std::max(s, t)}).second)
      throw ConfigError("edge " + std::to_string(s) + "-" + std::to_string(t) + " oriented twice");
  }
  if (edges.size() != c.edges().size()) throw ConfigError("quiver must orient every edge of " + c.name());
  std::sort(arrows.begin(), arrows.end(), [](const auto& x, const auto& y) {
    return std::make_pair(std::min(x.first, x.second), std::max(x.first, x.second)) <
           std::make_pair(std::min(y.first, y.second), std::max(y.first, y.second));
  });
  return DynkinQuiver{std::move(arrows)};
}

DynkinQuiver DynkinQuiver::parse(const CartanDatum& c, const std::string& text) {
  std::vector<std::pair<int, int>> arrows;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(std::remove(tok.begin(), tok.end(), ' '), tok.end());
    auto gt = tok.find('>');
    if (gt == std::string::npos) throw ConfigError("bad arrow '" + tok + "' (expected i>j)");
    try {
      std::size_t u1 = 0, u2 = 0;
      std::string a = tok.substr(0, gt), b = tok.substr(gt + 1);
      int s = std::stoi(a, &u1), t = std::stoi(b, &u2);
      if (u1 != a.size() || u2 != b.size()) throw ConfigError("");
      arrows.emplace_back(s, t);
    } catch (const std::exception&) {
      throw ConfigError("bad arrow '" + tok + "' (expected i>j)");
    }
  }
  return from_arrows(c, std::move(arrows));
}

std::vector<DynkinQuiver> DynkinQuiver::all(const CartanDatum& c) {
  auto edges = c.edges();
  std::vector<DynkinQuiver> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << edges.size()); ++mask) {
    std::vector<std::pair<int, int>> arrows;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      auto [a, b] = edges[e];
      arrows.push_back(mask >> e & 1 ? std::make_pair(a, b) : std::make_pair(b, a));
    }
    out.push_back(from_arrows(c, std::move(arrows)));
  }
  return out;
}

QData QData::with_base(const CartanDatum& c, const DynkinQuiver& q, int base) {
  std::vector<int> phi(static_cast<std::size_t>(c.rank()), 0);
  std::vector<bool> seen(phi.size(), false);
  std::deque<int> queue{1};
  phi[0] = base;
  seen[0] = true;
  while (!queue.empty()) {
    int i = queue.front();
    queue.pop_front();
    for (int j : c.neighbors(i)) {
      if (seen[static_cast<std::size_t>(j - 1)]) continue;
      seen[static_cast<std::size_t>(j - 1)] = true;
      phi[static_cast<std::size_t>(j - 1)] = phi[static_cast<std::size_t>(i - 1)] + (q.has_arrow(j, i) ? 1 : -1);
      queue.push_back(j);
    }
  }
  return QData{c, q, std::move(phi)};
}

nlohmann::json QData::to_json() const {
  return {{"cartan", cartan.name()}, {"quiver", quiver.to_string()}, {"phi", phi}};
}

std::vector<QDataViolation> validate_qdata(const QData& q) {
  std::vector<QDataViolation> out;
  if (q.phi.size() != static_cast<std::size_t>(q.cartan.rank())) {
    out.push_back({"size", "phi", "height function needs " + std::to_string(q.cartan.rank()) + " values"});
    return out;
  }
  if (q.height(1) % 2 != 0) out.push_back({"phi(1) odd", "1", "phi(1) = " + std::to_string(q.height(1)) + " is odd"});
  for (const auto& [s, t] : q.quiver.arrows)
    if (q.height(s) != q.height(t) + 1)
      out.push_back({"arrow", std::to_string(s) + ">" + std::to_string(t),
                     "arrow " + std::to_string(s) + ">" + std::to_string(t) + " needs phi(" + std::to_string(s) + ") = phi(" +
                         std::to_string(t) + ") + 1, got " + std::to_string(q.height(s)) + " and " + std::to_string(q.height(t))});
  return out;
}

std::vector<QData> enumerate_qdata(const CartanDatum& c, const std::vector<int>& bases) {
  std::vector<QData> out;
  for (const DynkinQuiver& q : DynkinQuiver::all(c))
    for (int b : bases) out.push_back(QData::with_base(c, q, b));
  return out;
}

std::string VertexLabel::to_string() const { return "(" + std::to_string(i) + "," + std::to_string(p) + ")"; }

bool in_c0(const CartanDatum& c, const VertexLabel& v) {
  int d = c.distance(1, v.i);
  return ((v.p - d) % 2 + 2) % 2 == 0;
}

std::optional<RootVec> ARQuiver::root_at(const VertexLabel& v) const {
  for (const ARVertex& x : vertices)
    if (x.label == v) return x.root;
  return std::nullopt;
}

std::optional<VertexLabel> ARQuiver::label_of(const RootVec& r) const {
  for (const ARVertex& x : vertices)
    if (x.root == r) return x.label;
  return std::nullopt;
}

nlohmann::json ARQuiver::to_json() const {
  nlohmann::json vs = nlohmann::json::array(), as = nlohmann::json::array();
  for (const ARVertex& v : vertices) vs.push_back({{"i", v.label.i}, {"p", v.label.p}, {"root", v.root.coords}});
  for (const auto& [a, b] : arrows) as.push_back({{a.i, a.p}, {b.i, b.p}});
  return {{"vertices", vs}, {"arrows", as}};
}

std::string ARQuiver::to_tsv() const {
  if (vertices.empty()) return "i\n";
  int lo = vertices.front().label.p, hi = lo, rank = vertices.front().root.rank();
  for (const ARVertex& v : vertices) {
    lo = std::min(lo, v.label.p);
    hi = std::max(hi, v.label.p);
  }
  std::string s = "i";
  for (int p = lo; p <= hi; ++p) s += "\t" + std::to_string(p);
  s += "\n";
  for (int i = 1; i <= rank; ++i) {
    s += std::to_string(i);
    for (int p = lo; p <= hi; ++p) {
      auto r = root_at({i, p});
      s += "\t" + (r ? r->to_string() : std::string("."));
    }
    s += "\n";
  }
  return s;
}

ARQuiver ar_quiver(const QData& q, const RootSystem& rs) {
  const CartanDatum& c = q.cartan;
  if (!(c == rs.cartan())) throw DomainError("Q-data and root system have different Cartan data");
  auto violations = validate_qdata(q);
  if (!violations.empty()) throw DomainError("invalid Q-data: " + violations.front().message);
  const int n = c.rank();

  // reach[i][k]: a path i -> ... -> k exists (including i = k).
  std::vector<std::vector<bool>> reach(static_cast<std::size_t>(n + 1), std::vector<bool>(static_cast<std::size_t>(n + 1), false));
  for (int i = 1; i <= n; ++i) {
    std::deque<int> queue{i};
    reach[i][i] = true;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (const auto& [s, t] : q.quiver.arrows)
        if (s == u && !reach[i][t]) {
          reach[i][t] = true;
          queue.push_back(t);
        }
    }
  }
  std::vector<RootVec> projective, injective;
  for (int i = 1; i <= n; ++i) {
    RootVec pr = RootVec::zero(n), in = RootVec::zero(n);
    for (int k = 1; k <= n; ++k) {
      if (reach[i][k]) pr[k] = 1;
      if (reach[k][i]) in[k] = 1;
    }
    projective.push_back(pr);
    injective.push_back(in);
  }

  std::map<VertexLabel, RootVec> label;
  for (int i = 1; i <= n; ++i) label[{i, q.height(i)}] = projective[static_cast<std::size_t>(i - 1)];
  const std::size_t limit = rs.num_positive();
  // Ordered by (i, p) in the map; sweep p upward.
  int p = *std::min_element(q.phi.begin(), q.phi.end());
  int p_end = *std::max_element(q.phi.begin(), q.phi.end()) + 2 * static_cast<int>(limit) + 2;
  for (; p <= p_end; ++p) {
    for (int i = 1; i <= n; ++i) {
      auto it = label.find({i, p});
      if (it == label.end()) continue;
      const RootVec cur = it->second;
      if (std::find(injective.begin(), injective.end(), cur) != injective.end()) continue;
      RootVec next = -cur;
      for (int j : c.neighbors(i)) {
        auto nb = label.find({j, p + 1});
        if (nb != label.end()) next += nb->second;
      }
      if (!next.is_nonnegative() || next.is_zero() || !rs.is_positive_root(next))
        throw InvariantViolation("knitting produced " + next.to_string() + " at " + VertexLabel{i, p + 2}.to_string());
      label[{i, p + 2}] = next;
      if (label.size() > limit) throw InvariantViolation("knitting produced more vertices than positive roots");
    }
  }

  ARQuiver ar;
  std::set<RootVec> seen;
  for (const auto& [v, r] : label) {
    if (!seen.insert(r).second) throw InvariantViolation("root " + r.to_string() + " appears twice in the AR quiver");
    ar.vertices.push_back({v, r});
  }
  if (ar.vertices.size() != limit) throw InvariantViolation("AR quiver has " + std::to_string(ar.vertices.size()) + " vertices");
  std::sort(ar.vertices.begin(), ar.vertices.end(), [](const ARVertex& a, const ARVertex& b) {
    return std::make_pair(a.label.p, a.label.i) < std::make_pair(b.label.p, b.label.i);
  });
  for (const ARVertex& v : ar.vertices)
    for (int j : c.neighbors(v.label.i))
      if (label.count({j, v.label.p + 1})) ar.arrows.emplace_back(v.label, VertexLabel{j, v.label.p + 1});
  return ar;
}

CoordinateBijection root_coordinate_bijection(const ARQuiver& ar) {
  CoordinateBijection b;
  for (const ARVertex& v : ar.vertices) {
    b.to_label[v.root] = v.label;
    b.to_root[v.label] = v.root;
  }
  if (b.to_label.size() != ar.vertices.size() || b.to_root.size() != ar.vertices.size())
    throw InvariantViolation("AR labels are not a bijection");
  return b;
}

bool is_adapted(const ReducedWord& w, const DynkinQuiver& q) {
  DynkinQuiver cur = q;
  for (int i : w.letters) {
    if (!cur.is_sink(i)) return false;
    cur = cur.reflected(i);
  }
  return true;
}

ReducedWord adapted_word(const RootSystem& rs, const DynkinQuiver& q) {
  // Reading the AR quiver by increasing height gives a linear extension of its arrows.
  ARQuiver ar = ar_quiver(QData::with_base(rs.cartan(), q), rs);
  ReducedWord w;
  for (const ARVertex& v : ar.vertices) w.letters.push_back(v.label.i);
  if (!is_reduced(rs.cartan(), w) || !is_adapted(w, q))
    throw InvariantViolation("AR reading " + w.to_string() + " is not an adapted reduced word");
  return w;
}

VertexLabel dshift_label(const InvolutionData& inv, const VertexLabel& v, int k) {
  int i = v.i;
  if (k % 2 != 0) i = inv(i);
  return {i, v.p + k * inv.coxeter};
}

}  // namespace cuspkit
