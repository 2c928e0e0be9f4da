#pragma once

#include <vector>

#include "qcong/int_poly.hpp"

namespace qcong {

/// Z[q] / (q^n - 1)^power with integer representatives of degree < n*power.
///
/// Since Phi_n(q)^m divides (q^n - 1)^m, a congruence modulo Phi_n(q)^m can be
/// decided on representatives folded modulo (q^n - 1)^power for any
/// power >= m. Folding is cheap: with u = q^n - 1, q^{an+j} = q^j (1+u)^a
/// ≡ q^j * sum_{i<power} C(a,i) u^i, which keeps all arithmetic over Z and
/// avoids rational coefficient growth entirely. This ring backs the
/// large-n congruence checks; the exact Q(q) route is kept for small n and
/// cross-validated against it.
class FoldedRing {
 public:
  FoldedRing(long n, long power);

  long n() const { return n_; }
  long power() const { return power_; }
  long rep_degree_bound() const { return n_ * power_; }

  /// Representative of p, degree < n*power.
  IntPoly reduce(const IntPoly& p) const;

  IntPoly mul(const IntPoly& a, const IntPoly& b) const { return reduce(a * b); }
  /// a * (1 - sign*q^j); one shifted subtraction plus a fold.
  IntPoly mul_one_minus(const IntPoly& a, int sign, long j) const;
  /// a * q^j for j >= 0.
  IntPoly mul_qpow(const IntPoly& a, long j) const { return reduce(a.shifted(j)); }

  /// Representative of q^e for ANY integer e (negative exponents use the
  /// binomial series of (1+u)^a with integer coefficients).
  IntPoly q_power(long e) const;

 private:
  const std::vector<Int>& weights(long a) const;  // fold row for q^{an}

  long n_;
  long power_;
  mutable std::vector<std::vector<Int>> weight_rows_;  // indexed by a >= 0
};

}  // namespace qcong
