#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "defcor/io.hpp"
#include "defcor/solver.hpp"

namespace defcor {

enum class Verdict { verified, falsified, error };
std::string to_string(Verdict v);

struct CheckResult {
  std::string id;
  bool passed = false;
  std::string detail;
  /// Structured payload; for a failed check, the counterexample.
  json data;
};

/// Outcome of one registered claim or fuzz target. Checks are sorted by id.
struct VerificationReport {
  std::string claim;
  Verdict verdict = Verdict::error;
  std::vector<CheckResult> checks;
  std::uint64_t seed = 0;
  double elapsed_ms = 0.0;
  std::string error;

  /// {claim, verdict, checks:[{id, passed, detail, data?}], seed, elapsed_ms}.
  /// Without timing the document depends only on the claim and the seed.
  json to_json(bool timing = true) const;
  /// 0 verified, 1 falsified, 2 error.
  int exit_code() const;
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  int threads = 1;
  /// Overrides the default iteration count of randomized checks.
  std::optional<int> iters;
  SearchOptions search;
  /// Directory for counterexample files; empty means none are written.
  std::string reproducer_dir;
};

class UnknownClaim : public std::invalid_argument {
 public:
  explicit UnknownClaim(const std::string& what) : std::invalid_argument(what) {}
};

const std::vector<std::string>& claim_ids();
const std::vector<std::string>& fuzz_targets();
int default_iterations(const std::string& target);

/// Runs the acceptance procedure registered for `claim`. Exceptions other
/// than UnknownClaim become an error verdict.
VerificationReport verify_claim(const std::string& claim, const VerifyOptions& options = {});

/// `iters` seeded random instances of a fuzz target. Iteration i draws from
/// Rng(derive_seed(seed, i)), so results do not depend on the thread count.
VerificationReport run_fuzz(const std::string& target, int iters, const VerifyOptions& options = {});

/// Calls body(i) for i in [0, count) on up to `threads` threads.
void parallel_for(int count, int threads, const std::function<void(int)>& body);

}  // namespace defcor
