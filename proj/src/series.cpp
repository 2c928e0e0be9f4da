#include <cstdlib>
#include <sstream>

#include "checks_internal.hpp"

namespace qcong {
namespace detail {
namespace {

enum class Family { MinusHalfOdd, MinusHalfOddShift, OddOverFull, WangYu, B1, C1 };

Family family_of(SeriesId id) {
  switch (id) {
    case SeriesId::A1:
    case SeriesId::Anew5: return Family::MinusHalfOdd;       // (q;q^2)_k (-1;q^2)_k / (q^2;q^2)_k
    case SeriesId::A2:
    case SeriesId::Anew6: return Family::MinusHalfOddShift;  // (q;q^2)_k (-q^2;q^2)_k / (q^2;q^2)_k
    case SeriesId::Anew3:
    case SeriesId::Anew4: return Family::OddOverFull;        // (q;q^2)_k / (q;q)_k
    case SeriesId::WangYu: return Family::WangYu;
    case SeriesId::B1: return Family::B1;
    case SeriesId::C1: return Family::C1;
  }
  throw DomainError("unknown SeriesId");
}

void validate_series(SeriesId id, long n, long d) {
  if (n < 1 || n % 2 == 0) throw DomainError("series checks require odd n >= 1");
  if (id == SeriesId::WangYu && n <= 2 * std::labs(d) - 1)
    throw DomainError("wang-yu requires n > 2|d| - 1");
}

// Shared builder. The sum is accumulated as the single numerator over the
// common denominator q^E * prod of the full Pochhammer: writing the terms as
// poch_k * q^{e_k} / D_k with D_k = prod_{i<=k} f_i, the partial sums satisfy
// R_m = f_m * R_{m-1} + poch_m * q^{e_m}, one cheap multiply-by-binomial per
// step. `ring` = nullptr gives the exact numerator, otherwise everything is
// folded as it grows.
SeriesNumDen build_series(SeriesId id, long n, long d, const FoldedRing* ring) {
  validate_series(id, n, d);
  const Family fam = family_of(id);

  SeriesNumDen out;
  const bool half_base = fam != Family::OddOverFull && fam != Family::WangYu;
  for (long i = 1; i < n; ++i) out.den_one_minus.push_back(half_base ? 2 * i : i);
  // Monomial part of the common denominator. For Wang-Yu with d < 0 the
  // Pochhammer factors 1 - q^{2d+1+2i} with negative exponent are rewritten
  // as -q^{2d+1+2i} (1 - q^{-(2d+1+2i)}); the collected power of q is d^2.
  const long wang_m = (id == SeriesId::WangYu && d < 0) ? d * d : 0;
  switch (fam) {
    case Family::B1: out.den_qexp = (n - 1) * (n - 1); break;
    case Family::C1: out.den_qexp = n * n; break;
    case Family::WangYu: out.den_qexp = wang_m; break;
    default: out.den_qexp = 0; break;
  }

  auto mul_factor = [&](IntPoly& p, int sign, long j) {
    if (ring)
      p = ring->mul_one_minus(p, sign, j);
    else
      p.mul_one_minus(sign, j);
  };

  IntPoly acc;
  IntPoly poch(Int(1));
  int poch_sign = 1;
  long wang_mk = 0;  // q-exponent absorbed so far by the rewritten factors
  for (long k = 0; k < n; ++k) {
    if (k > 0) {
      mul_factor(acc, 1, half_base ? 2 * k : k);
      switch (fam) {
        case Family::MinusHalfOdd:
        case Family::B1:
          mul_factor(poch, 1, 2 * k - 1);
          mul_factor(poch, -1, 2 * k - 2);
          break;
        case Family::MinusHalfOddShift:
        case Family::C1:
          mul_factor(poch, 1, 2 * k - 1);
          mul_factor(poch, -1, 2 * k);
          break;
        case Family::OddOverFull:
          mul_factor(poch, 1, 2 * k - 1);
          break;
        case Family::WangYu: {
          const long e = 2 * d + 1 + 2 * (k - 1);
          if (e > 0) {
            mul_factor(poch, 1, e);
          } else {
            mul_factor(poch, 1, -e);
            poch_sign = -poch_sign;
            wang_mk += -e;
          }
          break;
        }
      }
    }
    long ek = 0;
    switch (fam) {
      case Family::MinusHalfOdd: ek = 2 * k; break;
      case Family::MinusHalfOddShift: ek = 2 * k + 1; break;
      case Family::OddOverFull: ek = k; break;
      case Family::WangYu: ek = k + wang_m - wang_mk; break;
      case Family::B1: ek = (n - 1) * (n - 1) - k * k; break;
      case Family::C1: ek = n * n - (k + 1) * (k + 1); break;
    }
    IntPoly term = poch.shifted(ek);
    if (poch_sign < 0) term = -term;
    acc += ring ? ring->reduce(term) : term;
  }
  out.num = std::move(acc);
  return out;
}

}  // namespace

SeriesNumDen build_series_folded(SeriesId id, long n, long d, const FoldedRing& ring) {
  return build_series(id, n, d, &ring);
}

SeriesNumDen build_series_exact(SeriesId id, long n, long d) {
  return build_series(id, n, d, nullptr);
}

}  // namespace detail

RatFunc series_lhs(SeriesId id, long n, CyclotomicCache& cache, long d) {
  detail::SeriesNumDen s = detail::build_series_exact(id, n, d);
  return detail::make_ratfunc_structured(std::move(s.num), s.den_one_minus, s.den_qexp, cache);
}

RatFunc series_rhs(SeriesId id, long n, long d) {
  if (n < 1 || n % 2 == 0) throw DomainError("series checks require odd n >= 1");
  if (id == SeriesId::WangYu && n <= 2 * std::labs(d) - 1)
    throw DomainError("wang-yu requires n > 2|d| - 1");
  detail::SignedMonomial m = detail::series_rhs_monomial(id, n, d);
  RatFunc r = RatFunc::q_power(m.exponent);
  return m.sign < 0 ? -r : r;
}

CheckResult check_series(SeriesId id, long n, long m, CyclotomicCache& cache, long d,
                         long exact_threshold) {
  detail::Stopwatch watch;
  if (m < 1 || m > 2) throw DomainError("modulus power must be 1 or 2");
  CheckResult res;
  res.name = check_name(id);
  res.n = n;
  res.power = m;
  if (id == SeriesId::WangYu) res.params["d"] = d;

  if (n <= exact_threshold) {
    CongruenceVerdict v = congruent_mod(series_lhs(id, n, cache, d), series_rhs(id, n, d), n, m, cache);
    res.holds = v.holds;
    res.valuation = v.valuation;
    res.detail = "exact route";
  } else {
    const long cap = m + 1;
    FoldedRing ring(n, cap);
    detail::SeriesNumDen s = detail::build_series_folded(id, n, d, ring);
    const long den_val = detail::one_minus_valuation(s.den_one_minus, n);
    if (den_val != 0) throw InternalNonIntegral("series denominator not coprime to Phi_n");
    detail::SignedMonomial rhs = detail::series_rhs_monomial(id, n, d);
    // LHS - RHS = (num - rhs * q^{den_qexp} * D) / (q^{den_qexp} * D) with the
    // denominator coprime to Phi_n, so only the numerator's valuation matters.
    IntPoly den_part = ring.q_power(s.den_qexp);
    for (long j : s.den_one_minus) den_part = ring.mul_one_minus(den_part, 1, j);
    den_part = rhs.exponent >= 0 ? ring.mul_qpow(den_part, rhs.exponent)
                                 : ring.mul(den_part, ring.q_power(rhs.exponent));
    if (rhs.sign < 0) den_part = -den_part;
    IntPoly diff = ring.reduce(s.num - den_part);
    detail::CappedVal v = detail::folded_valuation(diff, cache.get(n), cap);
    res.holds = v.value >= m;
    res.valuation = v.value;
    res.valuation_capped = v.capped;
    res.detail = "folded-ring route";
  }
  res.ms = watch.ms();
  return res;
}

}  // namespace qcong
