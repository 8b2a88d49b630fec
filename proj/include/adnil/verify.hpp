#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "adnil/core.hpp"

namespace adnil {

struct VerifyOptions {
  std::uint64_t seed = 1;
  int trials = 5;
  int jobs = 1;
};

struct VerifyOutcome {
  bool ok = true;
  std::vector<std::string> lines;  // one PASS/FAIL/SKIP/REPORT line per check
};

// Runs every cross-module invariant the library promises, at the given rank.
// Checks whose exhaustive form only scales to a smaller rank either sample
// (and say so) or are skipped with their limit stated; the first falsifying
// witness is embedded in the FAIL line.
VerifyOutcome verify_rank(Rank rank, const VerifyOptions& options);

// `count` ideals of the rank drawn with replacement from the canonical
// enumeration; deterministic in the seed.
std::vector<RootIdeal> sample_ideals(Rank rank, int count, std::uint64_t seed);

}  // namespace adnil
