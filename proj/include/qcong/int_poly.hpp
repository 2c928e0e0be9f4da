#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qcong/errors.hpp"

namespace qcong {

using Int = mpz_class;
using Rat = mpq_class;

/// Degree of the zero polynomial. A sentinel far below any real degree so
/// degree arithmetic cannot silently produce a plausible value.
inline constexpr long kNegInfDegree = std::numeric_limits<long>::min();

/// Dense univariate polynomial in q with arbitrary-precision integer
/// coefficients, ascending order (coeffs_[i] is the coefficient of q^i).
/// Normalized: no trailing zero coefficient; zero is the empty vector.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(Int constant);
  explicit IntPoly(long constant) : IntPoly(Int(constant)) {}
  IntPoly(std::initializer_list<Int> ascending_coeffs);
  explicit IntPoly(std::vector<Int> ascending_coeffs);

  static IntPoly monomial(Int coeff, long exponent);
  /// 1 - sign*q^j, the ubiquitous Pochhammer factor.
  static IntPoly one_minus(int sign, long exponent);

  bool is_zero() const { return coeffs_.empty(); }
  long degree() const { return coeffs_.empty() ? kNegInfDegree : static_cast<long>(coeffs_.size()) - 1; }
  /// Coefficient of q^i; zero beyond the degree.
  const Int& coeff(long i) const;
  const Int& leading() const;
  const std::vector<Int>& coeffs() const { return coeffs_; }

  bool operator==(const IntPoly& o) const { return coeffs_ == o.coeffs_; }

  IntPoly operator-() const;
  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly& operator+=(const IntPoly& o) { return *this = *this + o; }
  IntPoly& operator-=(const IntPoly& o) { return *this = *this - o; }
  IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }
  IntPoly operator*(const Int& c) const;

  IntPoly pow(unsigned long e) const;
  /// Multiply by q^e (e >= 0).
  IntPoly shifted(long e) const;
  /// In-place p <- p - sign * q^j * p, i.e. multiply by (1 - sign*q^j).
  void mul_one_minus(int sign, long j);

  /// Largest e with q^e | p (0 for p with nonzero constant term; 0 for zero).
  long trailing_zeros() const;

  /// Exact quotient; throws NotDivisible when the remainder is nonzero or the
  /// quotient is non-integral, DivisionByZero when d = 0.
  IntPoly exact_div(const IntPoly& d) const;
  /// Non-throwing variant: returns false instead of throwing NotDivisible.
  bool try_exact_div(const IntPoly& d, IntPoly& quotient) const;

  /// gcd of the coefficients, non-negative; content(0) = 0.
  Int content() const;
  /// p / content with positive leading coefficient; primitive_part(0) = 0.
  IntPoly primitive_part() const;

  Rat eval(const Rat& x) const;
  Int eval_int(const Int& x) const;

  /// Rendering as "c0 + c1*q + c2*q^2 + ...", zero terms omitted, unit
  /// coefficients of q-powers suppressed. The zero polynomial renders as "0".
  std::string to_string() const;
  /// Parses the same grammar; throws ParseError.
  static IntPoly parse(std::string_view text);

  /// Karatsuba switch-over degree for multiplication.
  static long karatsuba_threshold;

 private:
  void normalize();
  std::vector<Int> coeffs_;
};

inline IntPoly operator*(const Int& c, const IntPoly& p) { return p * c; }

/// Primitive gcd with positive leading coefficient (primitive PRS).
/// gcd(p, 0) = primitive_part(p); throws BothZero when both are zero.
IntPoly poly_gcd(const IntPoly& p, const IntPoly& r);

}  // namespace qcong
