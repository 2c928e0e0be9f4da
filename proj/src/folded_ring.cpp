#include "qcong/folded_ring.hpp"

namespace qcong {

FoldedRing::FoldedRing(long n, long power) : n_(n), power_(power) {
  if (n < 1 || power < 1) throw DomainError("FoldedRing: need n >= 1 and power >= 1");
}

// Fold row for q^{an}: q^{an} ≡ sum_t w[t] q^{tn} mod (q^n-1)^P, where
// w[t] = sum_{i=t}^{P-1} C(a,i) C(i,t) (-1)^{i-t}.
const std::vector<Int>& FoldedRing::weights(long a) const {
  if (static_cast<std::size_t>(a) >= weight_rows_.size())
    weight_rows_.resize(static_cast<std::size_t>(a) + 1);
  auto& row = weight_rows_[static_cast<std::size_t>(a)];
  if (row.empty()) {
    row.assign(static_cast<std::size_t>(power_), Int(0));
    std::vector<Int> bin(static_cast<std::size_t>(power_));
    for (long i = 0; i < power_; ++i) {
      Int b;
      mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(i));
      bin[static_cast<std::size_t>(i)] = b;
    }
    for (long t = 0; t < power_; ++t) {
      Int w(0);
      for (long i = t; i < power_; ++i) {
        Int c;
        mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(i), static_cast<unsigned long>(t));
        Int term = bin[static_cast<std::size_t>(i)] * c;
        if ((i - t) % 2 != 0) term = -term;
        w += term;
      }
      row[static_cast<std::size_t>(t)] = std::move(w);
    }
  }
  return row;
}

IntPoly FoldedRing::reduce(const IntPoly& p) const {
  long bound = rep_degree_bound();
  if (p.degree() < bound) return p;
  std::vector<Int> out(static_cast<std::size_t>(bound));
  const auto& coeffs = p.coeffs();
  for (long e = 0; e < static_cast<long>(coeffs.size()); ++e) {
    const Int& c = coeffs[static_cast<std::size_t>(e)];
    if (sgn(c) == 0) continue;
    long a = e / n_, j = e % n_;
    if (a < power_) {
      out[static_cast<std::size_t>(e)] += c;
      continue;
    }
    const auto& w = weights(a);
    for (long t = 0; t < power_; ++t) {
      if (sgn(w[static_cast<std::size_t>(t)]) == 0) continue;
      out[static_cast<std::size_t>(t * n_ + j)] += c * w[static_cast<std::size_t>(t)];
    }
  }
  return IntPoly(std::move(out));
}

IntPoly FoldedRing::mul_one_minus(const IntPoly& a, int sign, long j) const {
  IntPoly shifted = reduce(a.shifted(j));
  return reduce(sign > 0 ? a - shifted : a + shifted);
}

IntPoly FoldedRing::q_power(long e) const {
  long a = e >= 0 ? e / n_ : -((-e + n_ - 1) / n_);  // floor division
  long j = e - a * n_;
  if (a >= 0 && a < power_) return IntPoly::monomial(Int(1), a * n_ + j);
  // q^e = q^j (1+u)^a with u = q^n - 1; expand (1+u)^a mod u^P. The
  // generalized binomial C(a,i) is an integer for every integer a.
  std::vector<Int> binom(static_cast<std::size_t>(power_));
  binom[0] = 1;
  for (long i = 1; i < power_; ++i) {
    // C(a,i) = C(a,i-1) * (a-i+1) / i, exact at every step
    Int next = binom[static_cast<std::size_t>(i - 1)] * Int(a - i + 1);
    mpz_divexact_ui(next.get_mpz_t(), next.get_mpz_t(), static_cast<unsigned long>(i));
    binom[static_cast<std::size_t>(i)] = std::move(next);
  }
  // sum_i C(a,i) (q^n-1)^i expanded into the q^{tn} basis
  std::vector<Int> out(static_cast<std::size_t>(rep_degree_bound()));
  for (long i = 0; i < power_; ++i) {
    if (sgn(binom[static_cast<std::size_t>(i)]) == 0) continue;
    for (long t = 0; t <= i; ++t) {
      Int c;
      mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(i), static_cast<unsigned long>(t));
      c *= binom[static_cast<std::size_t>(i)];
      if ((i - t) % 2 != 0) c = -c;
      out[static_cast<std::size_t>(t * n_ + j)] += c;
    }
  }
  return IntPoly(std::move(out));
}

}  // namespace qcong
