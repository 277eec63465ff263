#include "cuspkit/liecore.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <sstream>

#include "cuspkit/errors.hpp"

namespace cuspkit {

char series_letter(Series s) {
  switch (s) {
    case Series::A: return 'A';
    case Series::D: return 'D';
    case Series::E: return 'E';
  }
  return '?';
}

CartanDatum CartanDatum::make(Series series, int rank) {
  std::vector<std::pair<int, int>> edges;
  switch (series) {
    case Series::A:
      if (rank < 1) throw ConfigError("A_n requires n >= 1");
      for (int i = 1; i < rank; ++i) edges.emplace_back(i, i + 1);
      break;
    case Series::D:
      if (rank < 4) throw ConfigError("D_n requires n >= 4");
      for (int i = 1; i < rank - 1; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(rank - 2, rank);
      break;
    case Series::E:
      if (rank < 6 || rank > 8) throw ConfigError("E_n requires n in {6,7,8}");
      edges = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}};
      if (rank >= 7) edges.emplace_back(6, 7);
      if (rank == 8) edges.emplace_back(7, 8);
      break;
  }
  std::vector<int> m(static_cast<std::size_t>(rank * rank), 0);
  for (int i = 0; i < rank; ++i) m[static_cast<std::size_t>(i * rank + i)] = 2;
  for (auto [i, j] : edges) {
    m[static_cast<std::size_t>((i - 1) * rank + (j - 1))] = -1;
    m[static_cast<std::size_t>((j - 1) * rank + (i - 1))] = -1;
  }
  return CartanDatum(series, rank, std::move(m));
}

std::string CartanDatum::name() const { return std::string(1, series_letter(series_)) + std::to_string(rank_); }

std::vector<int> CartanDatum::neighbors(int i) const {
  std::vector<int> out;
  for (int j = 1; j <= rank_; ++j)
    if (j != i && entry(i, j) != 0) out.push_back(j);
  return out;
}

int CartanDatum::distance(int i, int j) const {
  std::vector<int> dist(static_cast<std::size_t>(rank_ + 1), -1);
  std::deque<int> queue{i};
  dist[static_cast<std::size_t>(i)] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int u : neighbors(v)) {
      if (dist[static_cast<std::size_t>(u)] < 0) {
        dist[static_cast<std::size_t>(u)] = dist[static_cast<std::size_t>(v)] + 1;
        queue.push_back(u);
      }
    }
  }
  return dist[static_cast<std::size_t>(j)];
}

std::vector<std::pair<int, int>> CartanDatum::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= rank_; ++i)
    for (int j = i + 1; j <= rank_; ++j)
      if (entry(i, j) != 0) out.emplace_back(i, j);
  return out;
}

CartanDatum parse_cartan(const std::string& text) {
  if (text.size() < 2) throw ConfigError("bad Cartan type '" + text + "'");
  Series s;
  switch (std::toupper(static_cast<unsigned char>(text[0]))) {
    case 'A': s = Series::A; break;
    case 'D': s = Series::D; break;
    case 'E': s = Series::E; break;
    default: throw ConfigError("unsupported Cartan series in '" + text + "'");
  }
  int rank = 0;
  for (std::size_t k = 1; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k]))) throw ConfigError("bad Cartan type '" + text + "'");
    rank = rank * 10 + (text[k] - '0');
    if (rank > 64) throw ConfigError("rank too large in '" + text + "'");
  }
  return CartanDatum::make(s, rank);
}

// ---------------------------------------------------------------------------

RootVec RootVec::simple(int rank, int i) {
  RootVec v = zero(rank);
  v[i] = 1;
  return v;
}

int RootVec::height() const {
  int h = 0;
  for (int c : coords) h += c;
  return h;
}

bool RootVec::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c == 0; });
}

bool RootVec::is_nonnegative() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0; });
}

RootVec& RootVec::operator+=(const RootVec& o) {
  for (std::size_t k = 0; k < coords.size(); ++k) coords[k] += o.coords[k];
  return *this;
}

RootVec& RootVec::operator-=(const RootVec& o) {
  for (std::size_t k = 0; k < coords.size(); ++k) coords[k] -= o.coords[k];
  return *this;
}

RootVec operator-(RootVec a) {
  for (int& c : a.coords) c = -c;
  return a;
}

RootVec operator*(int k, RootVec a) {
  for (int& c : a.coords) c *= k;
  return a;
}

std::string RootVec::to_string() const {
  std::string s = "[";
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(coords[k]);
  }
  return s + "]";
}

bool canonical_less(const RootVec& a, const RootVec& b) {
  int ha = a.height(), hb = b.height();
  if (ha != hb) return ha < hb;
  return a.coords < b.coords;
}

int pairing(const CartanDatum& c, const RootVec& u, const RootVec& v) {
  int s = 0;
  for (int i = 1; i <= c.rank(); ++i) {
    if (u[i] == 0) continue;
    for (int j = 1; j <= c.rank(); ++j) s += u[i] * c.entry(i, j) * v[j];
  }
  return s;
}

RootVec reflection(const CartanDatum& c, int i, const RootVec& v) {
  int t = 0;
  for (int j = 1; j <= c.rank(); ++j) t += c.entry(i, j) * v[j];
  RootVec out = v;
  out[i] -= t;
  return out;
}

std::optional<std::size_t> RootSystem::index_of(const RootVec& v) const {
  auto it = index_.find(v);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

RootSystem build_root_system(const CartanDatum& c) { return build_root_system(c.series(), c.rank()); }

RootSystem build_root_system(Series series, int rank) {
  RootSystem rs(CartanDatum::make(series, rank));
  const CartanDatum& c = rs.cartan_;
  // Closure of the simple roots under reflections, kept inside the positive cone: every
  // non-simple positive root reflects down to a positive root of smaller height.
  std::vector<RootVec> found;
  std::map<RootVec, bool> seen;
  std::deque<RootVec> queue;
  for (int i = 1; i <= rank; ++i) {
    RootVec a = RootVec::simple(rank, i);
    seen[a] = true;
    queue.push_back(a);
  }
  while (!queue.empty()) {
    RootVec v = queue.front();
    queue.pop_front();
    found.push_back(v);
    for (int i = 1; i <= rank; ++i) {
      RootVec r = reflection(c, i, v);
      if (!r.is_nonnegative() || r.is_zero()) continue;
      if (seen.emplace(r, true).second) queue.push_back(r);
    }
  }
  std::sort(found.begin(), found.end(), canonical_less);
  rs.positive_ = std::move(found);
  for (std::size_t k = 0; k < rs.positive_.size(); ++k) rs.index_[rs.positive_[k]] = k;
  return rs;
}

// ---------------------------------------------------------------------------

std::string ReducedWord::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < letters.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(letters[k]);
  }
  return s;
}

ReducedWord parse_word(const std::string& text) {
  ReducedWord w;
  bool separated = text.find_first_of(", ") != std::string::npos;
  if (!separated) {
    for (char ch : text) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) throw ConfigError("bad word '" + text + "'");
      w.letters.push_back(ch - '0');
    }
    return w;
  }
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    try {
      w.letters.push_back(std::stoi(token));
    } catch (const std::exception&) {
      throw ConfigError("bad word '" + text + "'");
    }
    token.clear();
  };
  for (char ch : text) {
    if (ch == ',' || ch == ' ') {
      flush();
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      token += ch;
    } else {
      throw ConfigError("bad word '" + text + "'");
    }
  }
  flush();
  return w;
}

std::optional<std::size_t> ConvexSeq::position(const RootVec& v) const {
  for (std::size_t k = 0; k < betas.size(); ++k)
    if (betas[k] == v) return k + 1;
  return std::nullopt;
}

namespace {

// Applies r_{i_1} ... r_{i_m} to v (rightmost first).
RootVec apply_prefix(const CartanDatum& c, const std::vector<int>& letters, std::size_t m, RootVec v) {
  for (std::size_t t = m; t-- > 0;) v = reflection(c, letters[t], v);
  return v;
}

void check_letters(const CartanDatum& c, const ReducedWord& w) {
  for (int i : w.letters)
    if (i < 1 || i > c.rank()) throw InvalidWordError("letter " + std::to_string(i) + " outside index set");
}

}  // namespace

bool is_reduced(const CartanDatum& c, const ReducedWord& w) {
  check_letters(c, w);
  for (std::size_t k = 0; k < w.letters.size(); ++k) {
    RootVec b = apply_prefix(c, w.letters, k, RootVec::simple(c.rank(), w.letters[k]));
    if (!b.is_nonnegative()) return false;
  }
  return true;
}

ConvexSeq beta_sequence(const RootSystem& rs, const ReducedWord& w) {
  const CartanDatum& c = rs.cartan();
  check_letters(c, w);
  ConvexSeq seq;
  for (std::size_t k = 0; k < w.letters.size(); ++k) {
    RootVec b = apply_prefix(c, w.letters, k, RootVec::simple(c.rank(), w.letters[k]));
    if (!b.is_nonnegative()) throw InvalidWordError("word " + w.to_string() + " is not reduced");
    seq.betas.push_back(std::move(b));
  }
  if (seq.size() != rs.num_positive())
    throw InvalidWordError("word " + w.to_string() + " is reduced but not a word of the longest element");
  return seq;
}

namespace {

// Weyl element u stored as the images u(alpha_1..alpha_n). Appending r_i keeps the word reduced
// iff u(alpha_i) > 0, and (u r_i)(alpha_j) = u(alpha_j) - c_{i,j} u(alpha_i).
struct WeylImages {
  std::vector<RootVec> images;

  static WeylImages identity(int rank) {
    WeylImages u;
    for (int i = 1; i <= rank; ++i) u.images.push_back(RootVec::simple(rank, i));
    return u;
  }
  bool ascent(int i) const { return images[static_cast<std::size_t>(i - 1)].is_nonnegative(); }
  WeylImages times(const CartanDatum& c, int i) const {
    WeylImages out = *this;
    const RootVec& ai = images[static_cast<std::size_t>(i - 1)];
    for (int j = 1; j <= c.rank(); ++j) {
      int cij = c.entry(i, j);
      if (cij != 0) out.images[static_cast<std::size_t>(j - 1)] -= cij * ai;
    }
    return out;
  }
};

}  // namespace

WordEnumeration enumerate_reduced_words(const RootSystem& rs, std::size_t cap) {
  const CartanDatum& c = rs.cartan();
  const std::size_t len = rs.num_positive();
  WordEnumeration out;
  std::vector<int> prefix;
  std::function<bool(const WeylImages&)> dfs = [&](const WeylImages& u) -> bool {
    if (prefix.size() == len) {
      if (out.words.size() == cap) {
        out.truncated = true;
        return false;
      }
      out.words.push_back(ReducedWord{prefix});
      return true;
    }
    for (int i = 1; i <= c.rank(); ++i) {
      if (!u.ascent(i)) continue;
      prefix.push_back(i);
      bool go_on = dfs(u.times(c, i));
      prefix.pop_back();
      if (!go_on) return false;
    }
    return true;
  };
  dfs(WeylImages::identity(c.rank()));
  return out;
}

ReducedWord random_reduced_word(const RootSystem& rs, std::mt19937_64& rng) {
  const CartanDatum& c = rs.cartan();
  WeylImages u = WeylImages::identity(c.rank());
  ReducedWord w;
  while (w.letters.size() < rs.num_positive()) {
    std::vector<int> choices;
    for (int i = 1; i <= c.rank(); ++i)
      if (u.ascent(i)) choices.push_back(i);
    std::uniform_int_distribution<std::size_t> pick(0, choices.size() - 1);
    int i = choices[pick(rng)];
    w.letters.push_back(i);
    u = u.times(c, i);
  }
  return w;
}

bool convexity_check(const RootSystem& rs, std::span<const RootVec> seq) {
  std::map<RootVec, std::size_t> pos;
  for (std::size_t k = 0; k < seq.size(); ++k) {
    if (!rs.is_positive_root(seq[k])) throw DomainError("entry " + seq[k].to_string() + " is not a positive root");
    pos[seq[k]] = k;
  }
  for (std::size_t a = 0; a < seq.size(); ++a) {
    for (std::size_t b = a + 1; b < seq.size(); ++b) {
      RootVec sum = seq[a] + seq[b];
      if (!rs.is_positive_root(sum)) continue;
      auto it = pos.find(sum);
      if (it == pos.end()) continue;  // sum not listed: nothing to order
      if (!(a < it->second && it->second < b)) return false;
    }
  }
  return true;
}

InvolutionData involution_and_coxeter(const RootSystem& rs) {
  const CartanDatum& c = rs.cartan();
  WordEnumeration one = enumerate_reduced_words(rs, 1);
  const std::vector<int>& w0 = one.words.front().letters;
  InvolutionData out;
  for (int i = 1; i <= c.rank(); ++i) {
    RootVec img = -apply_prefix(c, w0, w0.size(), RootVec::simple(c.rank(), i));
    int star = 0;
    for (int j = 1; j <= c.rank(); ++j)
      if (img == RootVec::simple(c.rank(), j)) star = j;
    if (star == 0) throw InvariantViolation("w0 does not map simple roots to negative simple roots");
    out.star.push_back(star);
  }
  out.coxeter = static_cast<int>(2 * rs.num_positive()) / c.rank();
  return out;
}

}  // namespace cuspkit
