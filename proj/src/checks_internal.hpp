#pragma once

#include <chrono>
#include <vector>

#include "qcong/checks.hpp"
#include "qcong/folded_ring.hpp"

namespace qcong::detail {

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Signed monomial sign * q^exponent (exponent may be negative).
struct SignedMonomial {
  int sign = 1;
  long exponent = 0;
};

SignedMonomial series_rhs_monomial(SeriesId id, long n, long d);

// Numerator and factored denominator of a series LHS over the common
// denominator: den = q^den_qexp * prod_j (1 - q^j) over den_one_minus,
// with an overall sign on the numerator already applied.
struct SeriesNumDen {
  IntPoly num;
  std::vector<long> den_one_minus;
  long den_qexp = 0;
};

// Folded-ring build (num reduced); `ring.power()` must exceed the target
// modulus power so the valuation test is conclusive.
SeriesNumDen build_series_folded(SeriesId id, long n, long d, const FoldedRing& ring);
// Exact build (num is the honest dense numerator).
SeriesNumDen build_series_exact(SeriesId id, long n, long d);

// Phi_n-adic valuation of a folded representative, capped at the ring power.
struct CappedVal {
  long value = 0;
  bool capped = false;
};
CappedVal folded_valuation(const IntPoly& reduced, const IntPoly& phi, long cap);

// Phi_n-adic valuation of prod (1 - q^j): the number of j divisible by n
// (q^j - 1 is squarefree, so each such factor contributes exactly one).
long one_minus_valuation(const std::vector<long>& exponents, long n);

// Canonical rational function num / (q^den_qexp * prod_j (1 - q^j)) built by
// structured cancellation of cyclotomic factors (no generic gcd).
RatFunc make_ratfunc_structured(IntPoly num, const std::vector<long>& den_one_minus, long den_qexp,
                                CyclotomicCache& cache);

// ---- exact identity verification by evaluation at q = 2^bits ----
//
// Two integer polynomials whose coefficients are strictly below 2^{bits-1}
// in absolute value agree exactly iff their values at 2^bits agree, so a
// single big-integer comparison is a proof of polynomial identity once the
// L1 bound is respected. The chain identities involve only products of
// Pochhammer factors and q-binomials, whose L1 norms stay far below
// 2^{8n + 63}; kronecker_bits(n) returns that generous width.
long kronecker_bits(long n);
Int kronecker_eval(const IntPoly& p, long bits);  // divide-and-conquer assembly

// (1 - sign*q^j) evaluated at 2^bits.
Int kron_one_minus(int sign, long j, long bits);

}  // namespace qcong::detail
