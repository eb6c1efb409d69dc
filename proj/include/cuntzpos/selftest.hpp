#pragma once

// Randomized self-check run by `cuntzpos selftest`: the scalar closed form,
// primal/Fock soundness with certificate re-verification, positivity
// transfer through random row contractions, and dilation identities.

#include <cstdint>
#include <string>
#include <vector>

namespace cuntzpos {

struct SelftestOptions {
  std::uint64_t seed = 0;
  int count = 100;  // instances per suite
  /// Negative control: corrupt the first primal certificate before it is
  /// re-verified, which must make the soundness suite fail.
  bool corrupt_certificate = false;
};

struct SuiteResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  double seconds = 0.0;
  std::string note;  // first failure, if any

  bool passed() const { return failures == 0; }
};

std::vector<SuiteResult> run_selftest(const SelftestOptions& opts);

}  // namespace cuntzpos
