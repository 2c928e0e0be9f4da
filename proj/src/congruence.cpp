#include "qcong/congruence.hpp"

namespace qcong {

long phi_valuation(const IntPoly& p, long n, CyclotomicCache& cache) {
  if (p.is_zero()) return kValInf;
  const IntPoly phi = cache.get(n);
  long v = 0;
  IntPoly cur = p, quotient;
  while (cur.try_exact_div(phi, quotient)) {
    cur = std::move(quotient);
    ++v;
  }
  return v;
}

long phi_valuation(const RatFunc& f, long n, CyclotomicCache& cache) {
  if (f.is_zero()) return kValInf;
  return phi_valuation(f.num(), n, cache) - phi_valuation(f.den(), n, cache);
}

CongruenceVerdict congruent_mod(const RatFunc& f, const RatFunc& g, long n, long m,
                                CyclotomicCache& cache) {
  CongruenceVerdict v;
  RatFunc diff = f - g;
  if (diff.is_zero()) {
    v.holds = true;
    v.valuation = kValInf;
    v.denominator_coprime = true;
    return v;
  }
  // The difference is canonical, so Phi_n divides at most one of num, den.
  long den_val = phi_valuation(diff.den(), n, cache);
  v.denominator_coprime = den_val == 0;
  v.valuation = phi_valuation(diff.num(), n, cache) - den_val;
  v.holds = v.denominator_coprime && v.valuation >= m;
  return v;
}

ResidueRing::ResidueRing(long n, long power, CyclotomicCache& cache) : n_(n), power_(power) {
  if (n < 1 || power < 1) throw DomainError("ResidueRing: need n >= 1 and power >= 1");
  modulus_ = cache.get(n).pow(static_cast<unsigned long>(power));
  modulus_q_ = QPoly(modulus_);
}

ResidueElem::ResidueElem(const ResidueRing& ring, const QPoly& value) : ring_(&ring) {
  rep_ = poly_divrem(value, ring.modulus_q()).second;
}

ResidueElem ResidueElem::operator+(const ResidueElem& o) const {
  return ResidueElem(*ring_, rep_ + o.rep_);
}

ResidueElem ResidueElem::operator-(const ResidueElem& o) const {
  return ResidueElem(*ring_, rep_ - o.rep_);
}

ResidueElem ResidueElem::operator*(const ResidueElem& o) const {
  return ResidueElem(*ring_, rep_ * o.rep_);
}

ResidueElem ResidueElem::inverse() const {
  auto [g, u] = extended_gcd_first(rep_, ring_->modulus_q());
  if (g.degree() != 0) throw NotInvertible();
  return ResidueElem(*ring_, u);  // g is monic, so g = 1 and u * rep ≡ 1
}

ResidueElem ring_reduce(const RatFunc& f, const ResidueRing& ring) {
  ResidueElem num(ring, QPoly(f.num()));
  ResidueElem den(ring, QPoly(f.den()));
  return num * den.inverse();
}

}  // namespace qcong
