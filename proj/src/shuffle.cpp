#include "cuspkit/shuffle.hpp"

#include <algorithm>
#include <cctype>

#include "cuspkit/errors.hpp"

namespace cuspkit {

Word::Word(const std::vector<int>& letters) {
  letters_.reserve(letters.size());
  for (int i : letters) {
    if (i < 1 || i > 255) throw DomainError("letter out of range");
    letters_.push_back(static_cast<char>(i));
  }
}

std::vector<int> Word::letters() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::size_t k = 0; k < size(); ++k) out.push_back((*this)[k]);
  return out;
}

Word Word::concat(const Word& o) const {
  Word w = *this;
  w.letters_ += o.letters_;
  return w;
}

RootVec Word::weight(int rank) const {
  RootVec v = RootVec::zero(rank);
  for (std::size_t k = 0; k < size(); ++k) {
    int i = (*this)[k];
    if (i > rank) throw DomainError("letter " + std::to_string(i) + " exceeds rank");
    v[i] += 1;
  }
  return v;
}

std::string Word::to_string() const {
  bool small = std::all_of(letters_.begin(), letters_.end(), [](char c) { return static_cast<unsigned char>(c) < 10; });
  std::string s;
  for (std::size_t k = 0; k < size(); ++k) {
    if (!small && k) s += '.';
    s += std::to_string((*this)[k]);
  }
  return s;
}

Word Word::parse(const std::string& text) {
  std::vector<int> letters;
  if (text.find('.') == std::string::npos) {
    for (char ch : text) {
      if (ch < '1' || ch > '9') throw ConfigError("bad word '" + text + "'");
      letters.push_back(ch - '0');
    }
    return Word(letters);
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t dot = text.find('.', pos);
    std::string tok = text.substr(pos, dot == std::string::npos ? std::string::npos : dot - pos);
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw ConfigError("bad word '" + text + "'");
    letters.push_back(std::stoi(tok));
    if (dot == std::string::npos) break;
    pos = dot + 1;
  }
  return Word(letters);
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  int r = a.letters_.compare(b.letters_);
  // std::string::compare uses char_traits<char>, which compares as unsigned char.
  return r < 0 ? std::strong_ordering::less : (r > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

// ---------------------------------------------------------------------------

ShuffleElt ShuffleElt::of(const Word& w, LaurentPoly c) {
  ShuffleElt x;
  x.add(w, c);
  return x;
}

LaurentPoly ShuffleElt::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void ShuffleElt::add(const Word& w, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

std::optional<RootVec> ShuffleElt::weight(int rank) const {
  if (terms_.empty()) return std::nullopt;
  RootVec w = terms_.begin()->first.weight(rank);
  for (const auto& [word, c] : terms_)
    if (word.weight(rank) != w) return std::nullopt;
  return w;
}

bool ShuffleElt::is_homogeneous(int rank) const { return is_zero() || weight(rank).has_value(); }

const Word& ShuffleElt::leading_word() const {
  if (terms_.empty()) throw DomainError("zero element has no leading word");
  return terms_.rbegin()->first;
}

const LaurentPoly& ShuffleElt::leading_coeff() const {
  if (terms_.empty()) throw DomainError("zero element has no leading coefficient");
  return terms_.rbegin()->second;
}

ShuffleElt& ShuffleElt::operator+=(const ShuffleElt& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

ShuffleElt& ShuffleElt::operator-=(const ShuffleElt& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

ShuffleElt& ShuffleElt::operator*=(const LaurentPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

ShuffleElt ShuffleElt::shifted(int by) const {
  ShuffleElt x = *this;
  for (auto& [w, v] : x.terms_) v = v.shifted(by);
  return x;
}

ShuffleElt ShuffleElt::conjugated() const {
  ShuffleElt x = *this;
  for (auto& [w, v] : x.terms_) v = v.bar();
  return x;
}

std::map<Word, BigInt> ShuffleElt::at_one() const {
  std::map<Word, BigInt> out;
  for (const auto& [w, c] : terms_) {
    BigInt v = c.at_one();
    if (v != 0) out[w] = v;
  }
  return out;
}

nlohmann::json ShuffleElt::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [w, c] : terms_) j[w.to_string()] = c.to_string();
  return j;
}

ShuffleElt ShuffleElt::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("shuffle element must be a JSON object");
  ShuffleElt x;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_string()) throw ConfigError("coefficient for word '" + key + "' must be a string");
    x.add(Word::parse(key), LaurentPoly::parse(value.get<std::string>()));
  }
  return x;
}

std::string ShuffleElt::pretty() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.pretty() + ")*[" + w.to_string() + "]";
  }
  return s;
}

// ---------------------------------------------------------------------------

namespace {

struct WordShuffler {
  const CartanDatum& cartan;
  const Word& u;
  const Word& v;
  // crossing[a][j] = -(alpha_{u[a]}, wt(v[0..j))): cost of placing u[a] after j letters of v.
  std::vector<std::vector<int>> crossing;
  ShuffleElt out;
  std::string buffer;

  WordShuffler(const CartanDatum& c, const Word& uu, const Word& vv) : cartan(c), u(uu), v(vv) {
    crossing.assign(u.size(), std::vector<int>(v.size() + 1, 0));
    for (std::size_t a = 0; a < u.size(); ++a)
      for (std::size_t j = 0; j < v.size(); ++j) crossing[a][j + 1] = crossing[a][j] - c.entry(u[a], v[j]);
  }

  void run(std::size_t i, std::size_t j, int exponent, std::vector<int>& letters) {
    if (i == u.size() && j == v.size()) {
      out.add(Word(letters), LaurentPoly::q(exponent));
      return;
    }
    if (i < u.size()) {
      letters.push_back(u[i]);
      run(i + 1, j, exponent + crossing[i][j], letters);
      letters.pop_back();
    }
    if (j < v.size()) {
      letters.push_back(v[j]);
      run(i, j + 1, exponent, letters);
      letters.pop_back();
    }
  }
};

}  // namespace

ShuffleElt shuffle_words(const CartanDatum& c, const Word& u, const Word& v) {
  WordShuffler s(c, u, v);
  std::vector<int> letters;
  letters.reserve(u.size() + v.size());
  s.run(0, 0, 0, letters);
  return std::move(s.out);
}

ShuffleElt shuffle_mul(const CartanDatum& c, const ShuffleElt& x, const ShuffleElt& y) {
  ShuffleElt out;
  for (const auto& [u, cu] : x.terms()) {
    for (const auto& [v, cv] : y.terms()) {
      LaurentPoly cc = cu * cv;
      ShuffleElt uv = shuffle_words(c, u, v);
      for (const auto& [w, e] : uv.terms()) out.add(w, cc * e);
    }
  }
  return out;
}

ShuffleElt shuffle_power(const CartanDatum& c, const ShuffleElt& x, int n) {
  ShuffleElt p = ShuffleElt::unit();
  for (int k = 0; k < n; ++k) p = shuffle_mul(c, p, x);
  return p;
}

ShuffleElt bar(const CartanDatum& c, const ShuffleElt& x) {
  if (!x.is_homogeneous(c.rank())) throw DomainError("bar involution needs a homogeneous element");
  return x.conjugated();
}

int wt_pair(const CartanDatum& c, const ShuffleElt& x, const ShuffleElt& y) {
  auto wx = x.weight(c.rank());
  auto wy = y.weight(c.rank());
  if (!wx || !wy) throw DomainError("weight pairing needs homogeneous nonzero elements");
  return pairing(c, *wx, *wy);
}

}  // namespace cuspkit
