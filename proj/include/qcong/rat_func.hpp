#pragma once

#include <string>

#include "qcong/int_poly.hpp"

namespace qcong {

/// Canonical element of Q(q) as a fraction of two integer polynomials:
/// gcd(num, den) is a unit in Z[q] (the polynomial gcd is constant and the
/// integer contents are coprime) and den has positive leading coefficient.
/// The canonical form is unique, so operator== is mathematical equality.
class RatFunc {
 public:
  RatFunc() : num_(), den_(Int(1)) {}
  RatFunc(IntPoly num, IntPoly den);  // canonicalizes; throws DivisionByZero
  explicit RatFunc(IntPoly p) : num_(std::move(p)), den_(Int(1)) {}
  explicit RatFunc(const Rat& r);
  explicit RatFunc(long c) : num_(Int(c)), den_(Int(1)) {}

  /// q^e for any integer e, including negative.
  static RatFunc q_power(long e);
  /// Trusted constructor: the caller guarantees the pair is already in
  /// canonical form. Used by the structured series builders.
  static RatFunc from_canonical(IntPoly num, IntPoly den);

  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0 && den_.coeff(0) == 1; }

  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;  // throws DivisionByZero
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  RatFunc inverse() const;  // throws DivisionByZero when zero
  /// Any integer exponent; negative exponents require a nonzero base.
  RatFunc pow(long e) const;

  /// f(q^-1) as a canonical fraction (negative powers cleared).
  RatFunc subst_qinv() const;

  Rat eval(const Rat& x) const;  // throws PoleAtPoint

  std::string to_string() const;

 private:
  IntPoly num_, den_;
};

}  // namespace qcong
