#include "cuspkit/affine.hpp"

#include <algorithm>
#include <cstdlib>

#include "cuspkit/errors.hpp"
#include "cuspkit/pbw.hpp"

namespace cuspkit {

namespace {

std::vector<int> zeros_type_a(int n, int i, int j) {
  std::vector<int> z;
  int m = std::min({i, j, n + 1 - i, n + 1 - j});
  for (int s = 1; s <= m; ++s) z.push_back(std::abs(i - j) + 2 * s);
  return z;
}

std::vector<int> zeros_type_d(int n, int k, int l) {
  std::vector<int> z;
  const bool k_spin = k >= n - 1, l_spin = l >= n - 1;
  if (!k_spin && !l_spin) {
    for (int s = 1; s <= std::min(k, l); ++s) {
      z.push_back(std::abs(k - l) + 2 * s);
      z.push_back(2 * n - 2 - k - l + 2 * s);
    }
  } else if (k_spin != l_spin) {
    int m = k_spin ? l : k;
    for (int s = 1; s <= m; ++s) z.push_back(n - m - 1 + 2 * s);
  } else if (k == l) {
    for (int s = 1; s <= n / 2; ++s) z.push_back(4 * s - 2);
  } else {
    for (int s = 1; s <= (n - 1) / 2; ++s) z.push_back(4 * s);
  }
  std::sort(z.begin(), z.end());
  return z;
}

}  // namespace

std::vector<int> denominator_zeros(const CartanDatum& c, int i, int j) {
  const int n = c.rank();
  if (i < 1 || j < 1 || i > n || j > n) throw DomainError("node index out of range for " + c.name());
  switch (c.series()) {
    case Series::A: return zeros_type_a(n, i, j);
    case Series::D: return zeros_type_d(n, i, j);
    default: throw UnsupportedError("denominator tables are available for types A and D only, not " + c.name());
  }
}

AffineData::AffineData(const RootSystem& rs) : cartan_(rs.cartan()), inv_(involution_and_coxeter(rs)) {
  const int n = cartan_.rank();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) table_[{i, j}] = denominator_zeros(cartan_, i, j);
}

const std::vector<int>& AffineData::zeros(int i, int j) const {
  auto it = table_.find({i, j});
  if (it == table_.end()) throw DomainError("node index out of range for " + cartan_.name());
  return it->second;
}

int AffineData::delta(const FundLabel& x, const FundLabel& y) const {
  const auto& zxy = zeros(x.i, y.i);
  const auto& zyx = zeros(y.i, x.i);
  return static_cast<int>(std::count(zxy.begin(), zxy.end(), y.p - x.p) + std::count(zyx.begin(), zyx.end(), x.p - y.p));
}

int delta_fund(const AffineData& ad, const FundLabel& x, const FundLabel& y) { return ad.delta(x, y); }

bool root_module_check(const AffineData& ad, const FundLabel& x, std::optional<int> kmax) {
  const int km = kmax.value_or(ad.coxeter());
  for (int k = -km; k <= km; ++k) {
    if (k == 0) continue;
    int want = (k == 1 || k == -1) ? 1 : 0;
    if (ad.delta(x, ad.dshift(x, k)) != want) return false;
  }
  return true;
}

StrongDatumReport strong_datum_check(const AffineData& ad, const std::vector<FundLabel>& labels, const CartanDatum& target) {
  StrongDatumReport rep;
  rep.labels = labels;
  const int n = target.rank();
  if (static_cast<int>(labels.size()) != n) throw DomainError("need one label per node of " + target.name());
  const int h = ad.coxeter();
  for (int i = 1; i <= n; ++i) {
    const FundLabel& li = labels[static_cast<std::size_t>(i - 1)];
    if (!root_module_check(ad, li)) {
      rep.root_modules_ok = false;
      rep.failures.push_back("L_" + std::to_string(i) + " = " + li.to_string() + " is not a root module");
    }
  }
  rep.recovered.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 2));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      const FundLabel& li = labels[static_cast<std::size_t>(i - 1)];
      const FundLabel& lj = labels[static_cast<std::size_t>(j - 1)];
      rep.recovered[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = -ad.delta(li, lj);
      for (int k = -h; k <= h; ++k) {
        int want = k == 0 ? -target.entry(i, j) : 0;
        int got = ad.delta(li, ad.dshift(lj, k));
        if (got != want) {
          rep.pairs_ok = false;
          rep.failures.push_back("delta(L_" + std::to_string(i) + ", D^" + std::to_string(k) + " L_" + std::to_string(j) +
                                 ") = " + std::to_string(got) + ", expected " + std::to_string(want));
        }
      }
    }
  }
  rep.recovered_matches = true;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (rep.recovered[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] != target.entry(i, j))
        rep.recovered_matches = false;
  if (!rep.recovered_matches) rep.failures.push_back("recovered matrix differs from the Cartan matrix of " + target.name());
  return rep;
}

nlohmann::json StrongDatumReport::to_json() const {
  nlohmann::json ls = nlohmann::json::array();
  for (const FundLabel& l : labels) ls.push_back({l.i, l.p});
  return {{"labels", ls},           {"root_modules_ok", root_modules_ok}, {"pairs_ok", pairs_ok},
          {"recovered", recovered}, {"recovered_matches", recovered_matches}, {"passed", passed()},
          {"failures", failures}};
}

std::pair<int, int> CuspLine::window_position(int k) const {
  // k = idx + shift * length with 1 <= idx <= length
  int shift = (k - 1) >= 0 ? (k - 1) / length : -((length - k) / length);
  return {k - shift * length, shift};
}

CuspLine cuspidal_line(const QData& q, const RootSystem& rs, const ReducedWord& w, int kmin, int kmax) {
  if (kmin > kmax) throw ConfigError("empty range for the cuspidal line");
  ConvexSeq seq = beta_sequence(rs, w);
  CuspLine line{q, w, false, kmin, kmax, 0, {}, {}};
  line.length = static_cast<int>(seq.size());
  line.adapted = is_adapted(w, q.quiver);
  if (line.adapted) {
    ARQuiver ar = ar_quiver(q, rs);
    CoordinateBijection bij = root_coordinate_bijection(ar);
    InvolutionData inv = involution_and_coxeter(rs);
    for (int k = kmin; k <= kmax; ++k) {
      auto [idx, shift] = line.window_position(k);
      line.labels[k] = dshift_label(inv, bij.to_label.at(seq[static_cast<std::size_t>(idx)]), shift);
    }
  } else {
    PbwContext ctx(rs, w);
    for (int k = kmin; k <= kmax; ++k) {
      auto [idx, shift] = line.window_position(k);
      line.classes[k] = ClassRef{idx, shift, ctx.dual_root_vector(static_cast<std::size_t>(idx))};
    }
  }
  return line;
}

nlohmann::json CuspLine::to_json() const {
  nlohmann::json j;
  j["qdata"] = qdata.to_json();
  j["word"] = word.letters;
  j["adapted"] = adapted;
  j["kmin"] = kmin;
  j["kmax"] = kmax;
  j["length"] = length;
  nlohmann::json entries = nlohmann::json::object();
  for (const auto& [k, l] : labels) entries[std::to_string(k)] = {{"i", l.i}, {"p", l.p}};
  for (const auto& [k, c] : classes)
    entries[std::to_string(k)] = {{"window_index", c.window_index}, {"shift", c.shift}, {"class", c.cls.to_json()}};
  j["entries"] = entries;
  return j;
}

bool unmixed_check(const AffineData& ad, const CuspLine& line) {
  if (!line.adapted) throw UnsupportedError("unmixedness needs fundamental labels; the word is not adapted to the quiver");
  for (const auto& [j, sj] : line.labels)
    for (const auto& [k, sk] : line.labels)
      if (j < k && ad.delta(sj, ad.dshift(sk, 1)) != 0) return false;
  return true;
}

StdDescriptor standard_descriptor(const CuspLine& line, const CuspParam& a) {
  StdDescriptor d;
  if (a.is_zero()) return d;
  if (a.min_index() < line.kmin || a.max_index() > line.kmax)
    throw RangeError("parameter support [" + std::to_string(a.min_index()) + "," + std::to_string(a.max_index()) +
                     "] leaves the line range [" + std::to_string(line.kmin) + "," + std::to_string(line.kmax) + "]");
  for (auto it = a.entries().rbegin(); it != a.entries().rend(); ++it) {
    StdFactor f;
    f.k = it->first;
    f.multiplicity = it->second;
    auto [idx, shift] = line.window_position(f.k);
    f.shift = shift;
    if (line.adapted)
      f.label = line.labels.at(f.k);
    else
      f.window_index = idx;
    d.factors.push_back(f);
  }
  return d;
}

nlohmann::json StdDescriptor::to_json() const {
  nlohmann::json fs = nlohmann::json::array();
  for (const StdFactor& f : factors) {
    nlohmann::json j = {{"k", f.k}, {"multiplicity", f.multiplicity}, {"shift", f.shift}};
    if (f.label) j["label"] = {{"i", f.label->i}, {"p", f.label->p}};
    if (f.window_index) j["window_index"] = *f.window_index;
    fs.push_back(j);
  }
  return {{"factors", fs}};
}

}  // namespace cuspkit
