#pragma once

#include <limits>
#include <memory>

#include "qcong/cyclotomic.hpp"
#include "qcong/qpoly.hpp"
#include "qcong/rat_func.hpp"

namespace qcong {

/// Valuation of an exact zero (f = g); also the "infinite" verdict valuation.
inline constexpr long kValInf = std::numeric_limits<long>::max();

/// Multiplicity of Phi_n in p by repeated exact division; kValInf for p = 0.
long phi_valuation(const IntPoly& p, long n, CyclotomicCache& cache);
/// Extended to fractions: valuation(num) - valuation(den); kValInf for 0.
long phi_valuation(const RatFunc& f, long n, CyclotomicCache& cache);

struct CongruenceVerdict {
  bool holds = false;
  long valuation = 0;  // Phi_n-adic valuation of f - g; kValInf iff f = g
  bool denominator_coprime = false;
};

/// Does f ≡ g (mod Phi_n(q)^m) under the coprime-denominator convention?
/// Ill-posed cases (Phi_n divides the denominator of f - g) are reported via
/// denominator_coprime = false, never thrown.
CongruenceVerdict congruent_mod(const RatFunc& f, const RatFunc& g, long n, long m,
                                CyclotomicCache& cache);

/// Q[q] / Phi_n(q)^m. Immutable after construction.
class ResidueRing {
 public:
  ResidueRing(long n, long power, CyclotomicCache& cache);

  long n() const { return n_; }
  long power() const { return power_; }
  const IntPoly& modulus() const { return modulus_; }
  const QPoly& modulus_q() const { return modulus_q_; }

 private:
  long n_;
  long power_;
  IntPoly modulus_;
  QPoly modulus_q_;
};

/// Canonical representative (degree < m*phi(n)) of a residue class.
class ResidueElem {
 public:
  ResidueElem(const ResidueRing& ring, const QPoly& value);  // reduces

  const ResidueRing& ring() const { return *ring_; }
  const QPoly& rep() const { return rep_; }
  bool is_zero() const { return rep_.is_zero(); }

  bool operator==(const ResidueElem& o) const { return rep_ == o.rep_; }

  ResidueElem operator+(const ResidueElem& o) const;
  ResidueElem operator-(const ResidueElem& o) const;
  ResidueElem operator*(const ResidueElem& o) const;

  /// Multiplicative inverse by the extended Euclidean algorithm; throws
  /// NotInvertible when the representative shares a factor with the modulus.
  ResidueElem inverse() const;

 private:
  const ResidueRing* ring_;
  QPoly rep_;
};

/// Image of f in the ring; the denominator is inverted via ResidueElem::inverse.
/// Throws NotInvertible when den(f) shares a factor with Phi_n.
ResidueElem ring_reduce(const RatFunc& f, const ResidueRing& ring);

}  // namespace qcong
