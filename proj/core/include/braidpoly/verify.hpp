#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "braidpoly/homfly.hpp"

namespace braidpoly {

// Catalog selection for a verification sweep. Families:
//   all_positive_words — every canonical-class representative within bounds;
//   torus_2k           — T(2,k), k <= 12;
//   hopf_sums          — H_k, k <= 6;
//   named_examples     — the cable and Baker–Kegel study braids plus both
//                        families above. An empty list means
//                        all_positive_words.
struct SweepOptions {
  int max_strands = 4;
  int max_length = 10;
  std::vector<std::string> families;
  int jobs = 1;
  EngineLimits limits = EngineLimits::from_env();
  bool memo_subsample = true;  // re-run ~5% of words with the memo disabled
};

// Aggregated sweep outcome. jsonl holds one JSON object per word, sorted by
// canonical_key, so equal options produce byte-identical reports. Words that
// are not positive-braid closures (the two named study braids) are processed
// with a derived profile and marked informational; they never count as
// failures.
struct SweepReport {
  std::size_t words = 0;
  std::size_t knots = 0;
  std::size_t informational = 0;
  std::size_t theorem_failures = 0;
  std::size_t corollary_failures = 0;
  std::size_t oracle_failures = 0;
  std::size_t grid_p_mismatches = 0;
  std::size_t memo_checks = 0;
  std::size_t memo_failures = 0;
  std::size_t errors = 0;
  double wall_seconds = 0.0;
  std::size_t memo_entries = 0;
  std::vector<std::string> failure_keys;
  std::vector<std::string> jsonl;

  bool all_pass() const {
    return theorem_failures == 0 && corollary_failures == 0 &&
           oracle_failures == 0 && grid_p_mismatches == 0 &&
           memo_failures == 0 && errors == 0;
  }
};

// Runs the full pipeline over the selected catalog: profile, HOMFLY,
// normalization, main-theorem check; for knots additionally the Conway and
// Jones corollary checks, the L-space screen, and the bracket/Burau oracle
// comparisons (up to 14 crossings). Engine errors are recorded per word and
// counted as failures. Deterministic for fixed options regardless of jobs.
SweepReport verify_sweep(const SweepOptions& options);

// Human-readable summary table (counts and wall-clock; not part of the
// machine-readable report).
std::string human_summary(const SweepReport& report);

}  // namespace braidpoly
