#include "cuspkit/cuspparam.hpp"

#include <set>
#include <sstream>

#include "cuspkit/errors.hpp"

namespace cuspkit {

CuspParam::CuspParam(std::map<int, int> entries) {
  for (const auto& [k, v] : entries) {
    if (v < 0) throw DomainError("cuspidal parameter entries must be non-negative");
    if (v > 0) entries_[k] = v;
  }
}

CuspParam CuspParam::from_window(const PbwExponent& a, int offset) {
  std::map<int, int> m;
  for (std::size_t k = 1; k <= a.size(); ++k)
    if (a[k]) m[static_cast<int>(k) + offset] = a[k];
  return CuspParam(std::move(m));
}

int CuspParam::operator[](int k) const {
  auto it = entries_.find(k);
  return it == entries_.end() ? 0 : it->second;
}

int CuspParam::total() const {
  int s = 0;
  for (const auto& [k, v] : entries_) s += v;
  return s;
}

CuspParam CuspParam::operator+(const CuspParam& o) const {
  std::map<int, int> m = entries_;
  for (const auto& [k, v] : o.entries_) m[k] += v;
  return CuspParam(std::move(m));
}

std::string CuspParam::to_string() const {
  std::string s;
  for (const auto& [k, v] : entries_) {
    if (!s.empty()) s += ',';
    s += std::to_string(k) + ":" + std::to_string(v);
  }
  return s;
}

CuspParam CuspParam::parse(const std::string& text) {
  std::map<int, int> m;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    auto colon = tok.find(':');
    if (colon == std::string::npos) throw ConfigError("bad cuspidal parameter entry '" + tok + "'");
    try {
      std::size_t u1 = 0, u2 = 0;
      std::string ks = tok.substr(0, colon), vs = tok.substr(colon + 1);
      int k = std::stoi(ks, &u1);
      int v = std::stoi(vs, &u2);
      if (u1 != ks.size() || u2 != vs.size() || v < 0 || m.count(k)) throw ConfigError("");
      m[k] = v;
    } catch (const std::exception&) {
      throw ConfigError("bad cuspidal parameter entry '" + tok + "'");
    }
  }
  return CuspParam(std::move(m));
}

namespace {

std::vector<int> differing(const CuspParam& a, const CuspParam& b) {
  std::set<int> keys;
  for (const auto& [k, v] : a.entries()) keys.insert(k);
  for (const auto& [k, v] : b.entries()) keys.insert(k);
  std::vector<int> out;
  for (int k : keys)
    if (a[k] != b[k]) out.push_back(k);
  return out;
}

}  // namespace

std::strong_ordering lex_left(const CuspParam& a, const CuspParam& b) {
  auto d = differing(a, b);
  if (d.empty()) return std::strong_ordering::equal;
  return a[d.front()] <=> b[d.front()];
}

std::strong_ordering lex_right(const CuspParam& a, const CuspParam& b) {
  auto d = differing(a, b);
  if (d.empty()) return std::strong_ordering::equal;
  return a[d.back()] <=> b[d.back()];
}

const char* ordering_name(Ordering o) {
  switch (o) {
    case Ordering::Less: return "Less";
    case Ordering::Greater: return "Greater";
    case Ordering::Equal: return "Equal";
    case Ordering::Incomparable: return "Incomparable";
  }
  return "?";
}

Ordering bilex_compare(const CuspParam& a, const CuspParam& b) {
  auto d = differing(a, b);
  if (d.empty()) return Ordering::Equal;
  bool left_less = a[d.front()] < b[d.front()];
  bool right_less = a[d.back()] < b[d.back()];
  if (left_less && right_less) return Ordering::Less;
  if (!left_less && !right_less) return Ordering::Greater;
  return Ordering::Incomparable;
}

}  // namespace cuspkit
