#pragma once

#include <string>
#include <string_view>

#include "qcong/int_poly.hpp"

namespace qcong {

/// A monomial value sign * q^exponent with sign in {+1, -1} and exponent >= 0.
/// Carries the parameters a, b of Carlitz's identity and Pochhammer bases:
/// -1 is {-1, 0}, q is {+1, 1}, -q^2 is {-1, 2}.
struct MonomialParam {
  int sign = 1;
  long exponent = 0;

  bool operator==(const MonomialParam&) const = default;
  bool is_one() const { return sign == 1 && exponent == 0; }

  std::string to_string() const;
  /// Accepts "1", "-1", "q", "-q", "q^3", "-q^2", ... Throws ParseError.
  static MonomialParam parse(std::string_view text);
};

/// [n]_q = 1 + q + ... + q^{n-1}; n >= 1.
IntPoly q_int(long n);

/// (a; q^s)_k = prod_{i=0}^{k-1} (1 - sign * q^{j + s*i}) for a = sign*q^j.
/// s >= 1, k >= 0; (a; q^s)_0 = 1.
IntPoly pochhammer(MonomialParam a, long s, long k);

/// Gaussian binomial in base q^s: (q^s;q^s)_n / ((q^s;q^s)_k (q^s;q^s)_{n-k}),
/// zero when k < 0 or k > n. Computed by exact division; a failed division
/// is mathematically impossible and raises InternalNonIntegral.
IntPoly q_binomial(long n, long k, long s = 1);

}  // namespace qcong
