#pragma once

#include <map>
#include <string>
#include <vector>

#include "qcong/int_poly.hpp"

namespace qcong {

std::vector<long> divisors(long n);  // sorted ascending; n >= 1
int moebius(long n);                 // in {-1, 0, 1}
long totient(long n);
bool is_prime(long n);  // trial division

/// Memoized table of cyclotomic polynomials. Intended use: warm up (single
/// writer), freeze, then share read-only between threads. A frozen cache
/// rejects lookups of uncached n.
class CyclotomicCache {
 public:
  /// Phi_n(q), computed as the exact quotient (q^n - 1) / prod_{d|n, d<n} Phi_d.
  const IntPoly& get(long n);
  /// Read-only lookup; throws DomainError when n is not cached.
  const IntPoly& get_frozen(long n) const;
  /// Fill entries for all n <= max_n.
  void warm_up(long max_n);
  void freeze() { frozen_ = true; }
  bool frozen() const { return frozen_; }
  std::size_t size() const { return table_.size(); }

  /// Text persistence: one "n<TAB>polynomial" line per entry.
  void save(const std::string& path) const;
  void load(const std::string& path);  // merges; validates degree = totient(n)

 private:
  std::map<long, IntPoly> table_;
  bool frozen_ = false;
};

IntPoly cyclotomic(long n, CyclotomicCache& cache);

/// Independent Möbius-formula route: prod_{d|n, mu(d)=1} (q^{n/d} - 1) divided
/// exactly by prod_{d|n, mu(d)=-1} (q^{n/d} - 1). Test oracle for `cyclotomic`.
IntPoly cyclotomic_oracle(long n);

}  // namespace qcong
