#pragma once

#include <string>
#include <vector>

namespace cheeger {

// One reproducible claim: an expected value, the value this build computes,
// and whether they match.  Informational claims document observations that
// are not part of the acceptance gate.
//
// documented_failure marks a claim whose published expected value is refuted
// by the computation itself: the claim still reports FAIL against the
// published statement, but the computed outcome matches a pinned,
// independently cross-checked counterexample, so the gate treats it as a
// known divergence rather than a build regression.
struct ClaimResult {
  std::string id;
  std::string description;
  std::string expected;
  std::string computed;
  bool pass = false;
  bool informational = false;
  bool documented_failure = false;
};

struct VerifyReport {
  std::vector<ClaimResult> claims;
  bool all_pass = false;  // strict: every non-informational claim passes
  bool gate_ok = false;   // every non-informational claim passes or is a
                          // documented failure reproduced exactly
};

// Runs every desk-scale numeric claim the library reproduces (A1..A10)
// plus informational observations (I*).  jobs controls the worker count of
// the underlying searches and sweeps; results are jobs-independent.
VerifyReport verify_paper(int jobs = 1);

}  // namespace cheeger
