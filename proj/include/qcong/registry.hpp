#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qcong/checks.hpp"

namespace qcong {

/// How a registry entry interprets the n range of a run.
enum class NFilter {
  OddOnly,    // series and proof-chain checks: odd n
  AnyN,       // carlitz: every n in range
  OddPrimes,  // classical checks: odd primes p in range
};

/// Optional per-check parameters a run may carry.
struct CheckParams {
  std::optional<long> d;  // wang-yu shift
  std::optional<long> k;
  std::optional<long> s;
  std::optional<long> r;      // classical exponent
  std::optional<long> power;  // modulus power override
};

struct CheckEntry {
  std::string name;
  NFilter n_filter = NFilter::OddOnly;
  long default_power = 1;
  /// Runs the check for one n. May return several results (grids, chains).
  std::function<std::vector<CheckResult>(long n, const CheckParams&, CyclotomicCache&)> run;
};

/// Stable string names consumed by the CLI; unknown names are rejected
/// before any work starts.
const std::vector<CheckEntry>& check_registry();
const CheckEntry* find_check(const std::string& name);

/// Deterministic parallel execution: results are reported in task order
/// regardless of completion order. parallelism <= 1 runs serially.
std::vector<CheckResult> run_checks(const std::vector<const CheckEntry*>& checks,
                                    const std::vector<long>& ns, const CheckParams& params,
                                    CyclotomicCache& cache, unsigned parallelism,
                                    bool fail_fast = false);

}  // namespace qcong
