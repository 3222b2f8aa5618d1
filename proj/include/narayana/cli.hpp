#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "narayana/prime.hpp"

namespace narayana::cli {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
  kOk = 0,        // evaluated, whatever the verdict
  kUsage = 1,     // bad flags, composite p, out-of-domain query
  kMismatch = 2,  // verify found a fast-path/oracle disagreement
};

/// Default ceiling on n for commands backed by exact arithmetic.
inline constexpr std::uint64_t kDefaultOracleBudget = 2000;

/// Seed for benchmark k sampling (std::mt19937_64).
inline constexpr std::uint64_t kBenchSeed = 0x6e61726179616e61ULL;

struct Mismatch {
  std::uint64_t n;
  std::uint64_t k;
  bool fast_divisible;
  bool oracle_divisible;

  friend auto operator<=>(const Mismatch&, const Mismatch&) = default;
};

struct VerifyReport {
  std::uint64_t checked = 0;
  std::vector<Mismatch> mismatches;  // sorted by (n, k)
};

/// Compares the digit criterion with exact N(n,k) mod p for every
/// 1 <= n <= max_n, 0 <= k < n. Rows are sharded over `jobs` threads; the
/// report does not depend on the thread count.
VerifyReport verify_against_oracle(PrimeBase p, std::uint64_t max_n,
                                   unsigned jobs = 1);

struct BenchReport {
  std::uint64_t n = 0;
  std::uint64_t k_min = 0;
  std::uint64_t k_max = 0;
  std::uint64_t samples = 0;
  std::uint64_t survivors = 0;
  std::uint64_t seed = kBenchSeed;
  double total_seconds = 0.0;

  double survivor_fraction() const {
    return samples == 0 ? 0.0 : static_cast<double>(survivors) / samples;
  }
  double mean_ns_per_query() const {
    return samples == 0 ? 0.0 : total_seconds * 1e9 / samples;
  }
};

/// Times the predicate at `samples` k drawn uniformly from [k_min, k_max].
/// Throws std::invalid_argument if the range is empty or leaves [0, n-1].
BenchReport run_bench(PrimeBase p, std::uint64_t n, std::uint64_t k_min,
                      std::uint64_t k_max, std::uint64_t samples,
                      std::uint64_t seed = kBenchSeed);

/// Runs the tool on `args` (program name excluded). Primary output goes to
/// `out` only after the whole command succeeded; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace narayana::cli
