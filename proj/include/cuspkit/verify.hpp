#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cuspkit/liecore.hpp"

namespace cuspkit {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct VerifyOptions {
  // Restrict every sweep to one type; unset means the standard families.
  std::optional<CartanDatum> cartan;
  int height_bound = 6;
  std::size_t word_cap = 10000;
  std::uint64_t seed = kDefaultSeed;
  std::size_t sampled_words = 50;  // for types with too many reduced words
  std::size_t order_triples = 10000;
};

struct SweepResult {
  std::string name;
  bool passed = false;
  bool skipped = false;
  std::string summary;
  std::vector<std::string> failures;
  double seconds = 0;

  nlohmann::json to_json(bool with_timing) const;
};

// Every nonzero weight of height <= bound.
std::vector<RootVec> weights_up_to(int rank, int bound);
// Kostant partition counts by dynamic programming over the positive roots.
long long kostant_count(const RootSystem& rs, const RootVec& mu);
// All reduced words if there are at most `cap`, else `samples` random ones (seeded).
std::vector<ReducedWord> words_for_sweep(const RootSystem& rs, std::size_t cap, std::size_t samples, std::uint64_t seed);

SweepResult sweep_convexity(const VerifyOptions& o);
SweepResult sweep_pbw_basis(const VerifyOptions& o);
SweepResult sweep_global_basis(const VerifyOptions& o);
SweepResult sweep_unitriangularity(const VerifyOptions& o);
SweepResult sweep_strong_datum(const VerifyOptions& o);
SweepResult sweep_unmixed(const VerifyOptions& o);
SweepResult sweep_parameterization(const VerifyOptions& o);
SweepResult sweep_invariants(const VerifyOptions& o);
SweepResult sweep_bilex_order(const VerifyOptions& o);

std::vector<SweepResult> run_verify(const VerifyOptions& o);

}  // namespace cuspkit
