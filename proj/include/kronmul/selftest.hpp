#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace kronmul {

struct SelftestConfig {
  std::uint64_t seed = 20080101;
  std::size_t iters = 200;
};

struct SelftestResult {
  std::size_t cases = 0;
  bool passed = true;
  /// Description of the first failing case, empty on success.
  std::string failure;
};

/// Randomised oracle-equivalence and round-trip checks. Iteration i draws
/// from a generator seeded with (seed, i), so a reported failure replays
/// with --seed S --iters i+1. Progress and the first failure go to `log`.
SelftestResult run_selftest(const SelftestConfig& config, std::ostream& log);

}  // namespace kronmul
