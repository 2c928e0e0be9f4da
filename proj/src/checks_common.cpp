#include "checks_internal.hpp"

#include <algorithm>

#include "qcong/cyclotomic.hpp"

namespace qcong {

std::string check_name(SeriesId id) {
  switch (id) {
    case SeriesId::Anew3: return "anew3";
    case SeriesId::Anew4: return "anew4";
    case SeriesId::Anew5: return "anew5";
    case SeriesId::Anew6: return "anew6";
    case SeriesId::WangYu: return "wang-yu";
    case SeriesId::A1: return "a1";
    case SeriesId::A2: return "a2";
    case SeriesId::B1: return "b1";
    case SeriesId::C1: return "c1";
  }
  throw DomainError("unknown SeriesId");
}

std::string step_name(StepId id) {
  switch (id) {
    case StepId::B2Identity: return "b2-identity";
    case StepId::QbinomNegK: return "qbinom-negk";
    case StepId::B3: return "b3";
    case StepId::B4: return "b4";
    case StepId::B5: return "b5";
    case StepId::MorleyB9: return "morley-b9";
    case StepId::B10: return "b10";
    case StepId::CentralQbinom: return "central-qbinom";
    case StepId::B11: return "b11";
    case StepId::B13: return "b13";
    case StepId::B14: return "b14";
    case StepId::B15: return "b15";
    case StepId::B16: return "b16";
    case StepId::B18: return "b18";
    case StepId::B19: return "b19";
    case StepId::B20: return "b20";
    case StepId::RatioIdentity: return "ratio-identity";
    case StepId::QpowLemma: return "qpow-lemma";
    case StepId::C2Identity: return "c2-identity";
    case StepId::C3: return "c3";
    case StepId::C4: return "c4";
    case StepId::C5: return "c5";
    case StepId::C6: return "c6";
    case StepId::C7: return "c7";
    case StepId::C8: return "c8";
    case StepId::C9: return "c9";
    case StepId::C10: return "c10";
    case StepId::C11: return "c11";
  }
  throw DomainError("unknown StepId");
}

long native_power(SeriesId id) {
  switch (id) {
    case SeriesId::Anew3:
    case SeriesId::Anew5:
    case SeriesId::Anew6:
    case SeriesId::WangYu:
      return 1;
    default:
      return 2;
  }
}

namespace detail {

SignedMonomial series_rhs_monomial(SeriesId id, long n, long d) {
  const bool one_mod4 = (n % 4 == 1);
  const int half_sign = ((n - 1) / 2) % 2 == 0 ? 1 : -1;  // (-1)^{(n-1)/2}
  const long lo = n * (n - 1) / 2;
  const long hi = n * (n + 1) / 2;
  switch (id) {
    case SeriesId::A1:
      return one_mod4 ? SignedMonomial{1, lo} : SignedMonomial{-1, hi};
    case SeriesId::A2:
      return one_mod4 ? SignedMonomial{1, hi} : SignedMonomial{-1, lo};
    case SeriesId::B1:
      return one_mod4 ? SignedMonomial{1, -lo} : SignedMonomial{-1, -hi};
    case SeriesId::C1:
      return one_mod4 ? SignedMonomial{1, -hi} : SignedMonomial{-1, -lo};
    case SeriesId::Anew3:
    case SeriesId::Anew4:
      return SignedMonomial{half_sign, (n * n - 1) / 4};
    case SeriesId::Anew5:
    case SeriesId::Anew6:
      return SignedMonomial{half_sign, 0};
    case SeriesId::WangYu: {
      const int sign = half_sign * (d % 2 == 0 ? 1 : -1);
      return SignedMonomial{sign, (n * n - (2 * d + 1) * (2 * d + 1)) / 4};
    }
  }
  throw DomainError("unknown SeriesId");
}

CappedVal folded_valuation(const IntPoly& reduced, const IntPoly& phi, long cap) {
  // `reduced` represents the true difference modulo (q^n - 1)^cap, and
  // Phi_n^v | true value iff Phi_n^v | reduced, for every v <= cap.
  if (reduced.is_zero()) return {cap, true};
  IntPoly cur = reduced, quot;
  long v = 0;
  while (v < cap && cur.try_exact_div(phi, quot)) {
    cur = quot;
    ++v;
  }
  return {v, v == cap};
}

long one_minus_valuation(const std::vector<long>& exponents, long n) {
  long v = 0;
  for (long j : exponents)
    if (j % n == 0) ++v;
  return v;
}

long kronecker_bits(long n) { return 8 * n + 64; }

namespace {

Int kron_eval_range(const std::vector<Int>& c, std::size_t lo, std::size_t hi, long bits) {
  if (hi - lo == 1) return c[lo];
  const std::size_t mid = lo + (hi - lo) / 2;
  Int low = kron_eval_range(c, lo, mid, bits);
  Int high = kron_eval_range(c, mid, hi, bits);
  mpz_mul_2exp(high.get_mpz_t(), high.get_mpz_t(), static_cast<mp_bitcnt_t>(bits) * (mid - lo));
  return low + high;
}

}  // namespace

Int kronecker_eval(const IntPoly& p, long bits) {
  if (p.is_zero()) return Int(0);
  return kron_eval_range(p.coeffs(), 0, p.coeffs().size(), bits);
}

Int kron_one_minus(int sign, long j, long bits) {
  Int v(1);
  Int m(sign);
  mpz_mul_2exp(m.get_mpz_t(), m.get_mpz_t(), static_cast<mp_bitcnt_t>(bits) * j);
  return v - m;
}

RatFunc make_ratfunc_structured(IntPoly num, const std::vector<long>& den_one_minus, long den_qexp,
                                CyclotomicCache& cache) {
  if (num.is_zero()) return RatFunc();
  // Each factor 1 - q^j is -(q^j - 1) = -prod_{d | j} Phi_d, a squarefree
  // cyclotomic product, so cancellation never needs a generic polynomial gcd:
  // peel each Phi_d out of the numerator up to its multiplicity.
  if (den_one_minus.size() % 2 == 1) num = -num;
  std::map<long, long> mult;
  for (long j : den_one_minus)
    for (long dd : divisors(j)) mult[dd]++;
  IntPoly den(Int(1));
  for (auto& [dd, cnt] : mult) {
    const IntPoly& phi = cache.get(dd);
    IntPoly quot;
    while (cnt > 0 && num.try_exact_div(phi, quot)) {
      num = quot;
      --cnt;
    }
    if (cnt > 0) den *= phi.pow(static_cast<unsigned long>(cnt));
  }
  const long cancel = std::min(num.trailing_zeros(), den_qexp);
  if (cancel > 0) {
    std::vector<Int> shifted(num.coeffs().begin() + cancel, num.coeffs().end());
    num = IntPoly(std::move(shifted));
  }
  // den is monic (product of monic cyclotomics times a power of q), so the
  // content condition of the canonical form is automatic.
  return RatFunc::from_canonical(std::move(num), den.shifted(den_qexp - cancel));
}

}  // namespace detail
}  // namespace qcong
