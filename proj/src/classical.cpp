#include "checks_internal.hpp"

#include "qcong/cyclotomic.hpp"

namespace qcong {
namespace {

Int pow_long(long base, long e) {
  Int r(1);
  for (long i = 0; i < e; ++i) r *= base;
  return r;
}

// sum_{k=0}^{bound-1} C(2k,k) / 2^k as an exact rational.
Rat classical_sum_exact(long bound) {
  Rat sum(0);
  Rat term(1);  // C(2k,k) / 2^k
  for (long k = 0; k < bound; ++k) {
    if (k > 0) {
      // C(2k,k)/C(2k-2,k-1) = 2(2k-1)/k, so the halved term grows by (2k-1)/k.
      Rat ratio(2 * k - 1, k);
      ratio.canonicalize();
      term *= ratio;
    }
    sum += term;
  }
  return sum;
}

void validate_classical(long p, long r, long power) {
  if (p == 2) throw EvenPrimeRejected();
  if (!is_prime(p)) throw NotPrime("p = " + std::to_string(p) + " is not prime");
  if (r < 1) throw DomainError("r must be positive");
  if (power < 1 || power > 2) throw DomainError("modulus power must be 1 or 2");
}

}  // namespace

CheckResult classical_check(const ClassicalParams& params) {
  detail::Stopwatch watch;
  validate_classical(params.p, params.r, params.power);
  const Int modulus = pow_long(params.p, params.power);
  Int bound_z = pow_long(params.p, params.r);
  if (!bound_z.fits_slong_p()) throw DomainError("p^r too large");
  const long bound = mpz_get_si(bound_z.get_mpz_t());

  Int inv2;
  Int two(2);
  mpz_invert(inv2.get_mpz_t(), two.get_mpz_t(), modulus.get_mpz_t());
  Int sum(0), binom, weight(1);
  for (long k = 0; k < bound; ++k) {
    mpz_bin_uiui(binom.get_mpz_t(), 2 * k, k);
    sum += binom * weight % modulus;
    weight = weight * inv2 % modulus;
  }
  const long half = (bound - 1) / 2;
  Int expected(half % 2 == 0 ? 1 : -1);
  Int diff = (sum - expected) % modulus;

  CheckResult res;
  res.name = params.power == 1 ? "sun-tauraso" : "sun";
  res.n = params.p;
  res.power = params.power;
  res.params = {{"p", params.p}, {"r", params.r}};
  res.holds = diff == 0;
  if (res.holds) {
    res.valuation = params.power;  // p-adic valuation known only up to the modulus
    res.valuation_capped = true;
  } else {
    res.valuation = mpz_divisible_ui_p(diff.get_mpz_t(), params.p) ? 1 : 0;
  }
  res.detail = "sum congruent to " + Int(sum % modulus).get_str() + " mod " + modulus.get_str();
  res.ms = watch.ms();
  return res;
}

CheckResult q_to_1_consistency(SeriesId id, long p, long r, CyclotomicCache& cache) {
  detail::Stopwatch watch;
  if (id != SeriesId::Anew3 && id != SeriesId::Anew4 && id != SeriesId::A1 && id != SeriesId::A2)
    throw DomainError("q->1 consistency covers anew3/anew4/a1/a2 only");
  const long power = native_power(id);
  validate_classical(p, r, power);
  Int bound_z = pow_long(p, r);
  if (!bound_z.fits_slong_p() || mpz_get_si(bound_z.get_mpz_t()) > 50)
    throw DomainError("q->1 consistency requires p^r <= 50");
  const long n = mpz_get_si(bound_z.get_mpz_t());

  // The canonical LHS cancels every power of 1-q (its value at q=1 is finite),
  // so the evaluation is exact; it must reproduce the classical rational sum,
  // which in turn must meet the classical target mod p^power.
  const Rat at_one = series_lhs(id, n, cache).eval(Rat(1));
  const Rat sum = classical_sum_exact(n);
  const Int modulus = pow_long(p, power);
  const long half = (n - 1) / 2;
  const Rat target(half % 2 == 0 ? 1 : -1);

  Rat diff = at_one - target;
  // diff = num/den with den coprime to p (den is a power of 2); the congruence
  // holds iff p^power divides num.
  bool cong = mpz_divisible_p(diff.get_num_mpz_t(), modulus.get_mpz_t()) &&
              !mpz_divisible_ui_p(diff.get_den_mpz_t(), static_cast<unsigned long>(p));

  CheckResult res;
  res.name = "q-to-1";
  res.n = p;
  res.power = power;
  res.params = {{"p", p}, {"r", r}};
  res.holds = (at_one == sum) && cong;
  res.valuation = res.holds ? power : 0;
  res.valuation_capped = res.holds;
  res.detail = check_name(id) + " at q=1: " + at_one.get_str() +
               (at_one == sum ? " = classical sum" : " != classical sum");
  res.ms = watch.ms();
  return res;
}

}  // namespace qcong
