#include "checks_internal.hpp"

namespace qcong {
namespace {

Rat rat_pow(const Rat& x, long e) {
  Rat r(1);
  for (long i = 0; i < e; ++i) r *= x;
  return r;
}

}  // namespace

CheckResult carlitz_check(long n, MonomialParam a, MonomialParam b, long base_power) {
  detail::Stopwatch watch;
  if (n < 0) throw DomainError("carlitz requires n >= 0");
  if (base_power < 1) throw DomainError("base power must be positive");
  if (a.is_one()) throw DomainError("a = 1 makes a right-hand denominator vanish");
  const long s = base_power;

  // Both sides over the common denominator (q^s; q^s)_n. On the left,
  // clearing all but the first k factors gives the forward recurrence
  // R_m = (1 - q^{sm}) R_{m-1} + num_m; on the right, the k-th term clears to
  // [n k]_{q^s} times (a; q^s)_{n+1} with the factor 1 - a q^{s(n-k)} removed.
  IntPoly lhs;
  IntPoly poch(Int(1));  // (a;q^s)_k (b;q^s)_k
  const int neg_ab = -a.sign * b.sign;
  for (long k = 0; k <= n; ++k) {
    if (k > 0) {
      lhs.mul_one_minus(1, s * k);
      poch.mul_one_minus(a.sign, a.exponent + s * (k - 1));
      poch.mul_one_minus(b.sign, b.exponent + s * (k - 1));
    }
    const long nk = n - k;
    IntPoly term = poch.shifted((a.exponent + b.exponent) * nk + s * nk * (n + k - 1) / 2);
    if (neg_ab == -1 && nk % 2 == 1) term = -term;
    lhs += term;
  }

  IntPoly rhs;
  const IntPoly a_full = pochhammer(a, s, n + 1);
  for (long k = 0; k <= n; ++k) {
    IntPoly term = a_full.exact_div(IntPoly::one_minus(a.sign, a.exponent + s * (n - k)));
    term *= q_binomial(n, k, s);
    term = term.shifted(b.exponent * k + s * k * (k - 1) / 2);
    if (b.sign == 1 && k % 2 == 1) term = -term;  // (-b)^k
    rhs += term;
  }

  CheckResult res;
  res.name = "carlitz";
  res.n = n;
  res.power = 0;
  res.params = {{"a-sign", a.sign}, {"a-exp", a.exponent},
                {"b-sign", b.sign}, {"b-exp", b.exponent},
                {"s", s}};
  res.holds = lhs == rhs;
  res.valuation = res.holds ? kValInf : 0;
  res.detail = "a=" + a.to_string() + " b=" + b.to_string() + " q->q^" + std::to_string(s) +
               (res.holds ? ", sides identical" : ", sides differ");
  res.ms = watch.ms();
  return res;
}

bool carlitz_eval_rational(long n, const Rat& a, const Rat& b, const Rat& q) {
  if (n < 0) throw DomainError("carlitz requires n >= 0");
  if (q == 0) throw DomainError("q = 0 is outside the identity's domain");

  auto poch = [&](const Rat& base, long k) {
    Rat r(1);
    Rat qa = base;
    for (long i = 0; i < k; ++i) {
      r *= 1 - qa;
      qa *= q;
    }
    return r;
  };
  for (long i = 1; i <= n; ++i)
    if (rat_pow(q, i) == 1) throw DomainError("q is a root of unity of order <= n");
  for (long k = 0; k <= n; ++k)
    if (a * rat_pow(q, n - k) == 1) throw DomainError("a q^{n-k} = 1 hits a pole");

  Rat lhs(0);
  for (long k = 0; k <= n; ++k) {
    const long nk = n - k;
    lhs += poch(a, k) * poch(b, k) / poch(q, k) * rat_pow(-a * b, nk) *
           rat_pow(q, nk * (n + k - 1) / 2);
  }
  Rat rhs(0);
  for (long k = 0; k <= n; ++k) {
    rhs += poch(a, n + 1) * rat_pow(-b, k) * rat_pow(q, k * (k - 1) / 2) /
           (poch(q, k) * poch(q, n - k) * (1 - a * rat_pow(q, n - k)));
  }
  return lhs == rhs;
}

}  // namespace qcong
