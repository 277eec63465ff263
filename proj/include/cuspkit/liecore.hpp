#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace cuspkit {

enum class Series { A, D, E };

char series_letter(Series s);

// Simply-laced Cartan matrix on I0 = {1..rank}. Bourbaki labelling: A_n and D_n chains start at
// node 1, D_n branches at n-2, E_n has node 2 attached to node 4.
class CartanDatum {
 public:
  static CartanDatum make(Series series, int rank);

  Series series() const { return series_; }
  int rank() const { return rank_; }
  std::string name() const;

  // 1-based entry c_{i,j}.
  int entry(int i, int j) const { return matrix_[idx(i, j)]; }
  std::vector<int> neighbors(int i) const;
  // Graph distance in the Dynkin diagram.
  int distance(int i, int j) const;
  std::vector<std::pair<int, int>> edges() const;  // i < j

  friend bool operator==(const CartanDatum&, const CartanDatum&) = default;

 private:
  CartanDatum(Series s, int rank, std::vector<int> m) : series_(s), rank_(rank), matrix_(std::move(m)) {}
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>((i - 1) * rank_ + (j - 1)); }

  Series series_;
  int rank_;
  std::vector<int> matrix_;
};

// Parses "A2", "D4", "E6".
CartanDatum parse_cartan(const std::string& text);

// Integer vector of coefficients of the simple roots.
struct RootVec {
  std::vector<int> coords;

  RootVec() = default;
  explicit RootVec(std::vector<int> c) : coords(std::move(c)) {}
  static RootVec zero(int rank) { return RootVec(std::vector<int>(static_cast<std::size_t>(rank), 0)); }
  static RootVec simple(int rank, int i);

  int rank() const { return static_cast<int>(coords.size()); }
  int operator[](int i) const { return coords[static_cast<std::size_t>(i - 1)]; }
  int& operator[](int i) { return coords[static_cast<std::size_t>(i - 1)]; }
  int height() const;
  bool is_zero() const;
  bool is_nonnegative() const;

  RootVec& operator+=(const RootVec& o);
  RootVec& operator-=(const RootVec& o);
  friend RootVec operator+(RootVec a, const RootVec& b) { return a += b; }
  friend RootVec operator-(RootVec a, const RootVec& b) { return a -= b; }
  friend RootVec operator-(RootVec a);
  friend RootVec operator*(int k, RootVec a);

  friend bool operator==(const RootVec&, const RootVec&) = default;
  friend auto operator<=>(const RootVec&, const RootVec&) = default;

  std::string to_string() const;  // "[1,0,1]"
};

// Canonical ordering used for reports: height first, then lexicographic coordinates.
bool canonical_less(const RootVec& a, const RootVec& b);

// Symmetric form (u, v) = sum u_i c_{i,j} v_j.
int pairing(const CartanDatum& c, const RootVec& u, const RootVec& v);

RootVec reflection(const CartanDatum& c, int i, const RootVec& v);

class RootSystem {
 public:
  const CartanDatum& cartan() const { return cartan_; }
  int rank() const { return cartan_.rank(); }
  const std::vector<RootVec>& positive_roots() const { return positive_; }
  std::size_t num_positive() const { return positive_.size(); }
  bool is_positive_root(const RootVec& v) const { return index_.count(v) != 0; }
  // Position in positive_roots().
  std::optional<std::size_t> index_of(const RootVec& v) const;

 private:
  friend RootSystem build_root_system(Series, int);
  explicit RootSystem(CartanDatum c) : cartan_(std::move(c)) {}

  CartanDatum cartan_;
  std::vector<RootVec> positive_;
  std::map<RootVec, std::size_t> index_;
};

RootSystem build_root_system(Series series, int rank);
RootSystem build_root_system(const CartanDatum& c);

struct ReducedWord {
  std::vector<int> letters;

  std::size_t size() const { return letters.size(); }
  std::string to_string() const;  // "1,2,1"
  friend bool operator==(const ReducedWord&, const ReducedWord&) = default;
  friend auto operator<=>(const ReducedWord&, const ReducedWord&) = default;
};

// Accepts "1,2,1", "1 2 1" or "121" (single-digit letters).
ReducedWord parse_word(const std::string& text);

struct ConvexSeq {
  std::vector<RootVec> betas;

  std::size_t size() const { return betas.size(); }
  // 1-based.
  const RootVec& operator[](std::size_t k) const { return betas[k - 1]; }
  // 1-based position of a root, if present.
  std::optional<std::size_t> position(const RootVec& v) const;
};

// True iff every prefix extension increases length, i.e. the word is reduced.
bool is_reduced(const CartanDatum& c, const ReducedWord& w);

// beta_k = r_{i_1} ... r_{i_{k-1}} (alpha_{i_k}). Throws InvalidWordError unless w is a reduced
// word of the longest element.
ConvexSeq beta_sequence(const RootSystem& rs, const ReducedWord& w);

struct WordEnumeration {
  std::vector<ReducedWord> words;
  bool truncated = false;
};

// Depth-first, letters tried in increasing order; stops after `cap` words.
WordEnumeration enumerate_reduced_words(const RootSystem& rs, std::size_t cap);

// Uniformly random letter among the admissible ones at each step.
ReducedWord random_reduced_word(const RootSystem& rs, std::mt19937_64& rng);

// For all a < b with beta_a + beta_b a root beta_c: a < c < b. Throws DomainError on a non-root entry.
bool convexity_check(const RootSystem& rs, std::span<const RootVec> seq);

struct InvolutionData {
  std::vector<int> star;  // star[i-1] = i*
  int coxeter = 0;

  int operator()(int i) const { return star[static_cast<std::size_t>(i - 1)]; }
};

// i* from w0(alpha_i) = -alpha_{i*}; h = 2|Phi+| / rank.
InvolutionData involution_and_coxeter(const RootSystem& rs);

}  // namespace cuspkit
