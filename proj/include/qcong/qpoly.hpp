#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qcong/int_poly.hpp"

namespace qcong {

/// Dense univariate polynomial with rational coefficients. Backs division
/// with remainder over Q, the residue-ring representatives, and the extended
/// Euclidean inverse.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(Rat constant);
  explicit QPoly(const IntPoly& p);
  explicit QPoly(std::vector<Rat> ascending_coeffs);

  static QPoly monomial(Rat coeff, long exponent);

  bool is_zero() const { return coeffs_.empty(); }
  long degree() const { return coeffs_.empty() ? kNegInfDegree : static_cast<long>(coeffs_.size()) - 1; }
  const Rat& coeff(long i) const;
  const Rat& leading() const;
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  bool operator==(const QPoly& o) const { return coeffs_ == o.coeffs_; }

  QPoly operator-() const;
  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator*(const QPoly& o) const;
  QPoly operator*(const Rat& c) const;

  /// Monic multiple: p / leading.
  QPoly monic() const;

  Rat eval(const Rat& x) const;
  std::string to_string() const;

  /// Is every coefficient an integer?
  bool is_integral() const;
  IntPoly to_int_poly() const;  // throws NotDivisible when non-integral

 private:
  void normalize();
  std::vector<Rat> coeffs_;
};

/// p = quotient * d + remainder with degree(remainder) < degree(d), exact
/// over Q. Throws DivisionByZero when d = 0.
std::pair<QPoly, QPoly> poly_divrem(const QPoly& p, const QPoly& d);
std::pair<QPoly, QPoly> poly_divrem(const IntPoly& p, const IntPoly& d);

/// Monic gcd over Q plus Bezout cofactor for the first argument:
/// g = a*u + b*v with g monic (or zero). Returns {g, u}.
std::pair<QPoly, QPoly> extended_gcd_first(const QPoly& a, const QPoly& b);

}  // namespace qcong
