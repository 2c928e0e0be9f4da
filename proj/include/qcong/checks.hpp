#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qcong/congruence.hpp"
#include "qcong/qseries.hpp"
#include "qcong/rat_func.hpp"

namespace qcong {

/// The truncated q-series whose sums the congruences are about.
enum class SeriesId {
  Anew3,   // sum (q;q^2)_k / (q;q)_k q^k                       (mod Phi_n)
  Anew4,   // same sum                                          (mod Phi_n^2)
  Anew5,   // sum (q;q^2)_k (-1;q^2)_k / (q^2;q^2)_k q^{2k}     (mod Phi_n)
  Anew6,   // sum (q;q^2)_k (-q^2;q^2)_k / (q^2;q^2)_k q^{2k+1} (mod Phi_n)
  WangYu,  // sum (q^{2d+1};q^2)_k / (q;q)_k q^k                (mod Phi_n)
  A1,      // Anew5's sum                                       (mod Phi_n^2)
  A2,      // Anew6's sum                                       (mod Phi_n^2)
  B1,      // sum (q;q^2)_k (-1;q^2)_k / (q^2;q^2)_k q^{-k^2}
  C1,      // sum (q;q^2)_k (-q^2;q^2)_k / (q^2;q^2)_k q^{-(k+1)^2}
};

/// One displayed step of the section-2 / section-3 derivations.
enum class StepId {
  B2Identity,  // the Carlitz specialization, exact in Q(q)
  QbinomNegK,  // [n-1, k]_{q^2} ≡ (-1)^k q^{-k^2-k}   (mod Phi_n), per k
  B3,          // a_{n,k} congruence, per k != (n-1)/2
  B4,          // (q;q^2)_{n-1} / (q^2;q^2)_{n-1} ≡ -q[n]
  B5,          // a_{n,k} ≡ b_{n,k}, per k != (n-1)/2
  MorleyB9,    // central q-binomial vs (-q;q)_{n-1}^2
  B10,
  CentralQbinom,  // [2n, n] ≡ 2 - n(1-q^n)
  B11,
  B13,  // alternating odd-denominator sum, mod Phi_n only
  B14,
  B15,
  B16,  // n ≡ 1 (mod 4)
  B18,  // n ≡ 1 (mod 4)
  B19,  // n ≡ 3 (mod 4)
  B20,  // n ≡ 3 (mod 4)
  RatioIdentity,  // exact in Q(q)
  QpowLemma,      // q^{sn} ≡ 1 - s(1-q^n), per s
  C2Identity,     // exact in Q(q)
  C3,             // c_{n,k} = q^{2k} a_{n,k}, exact, per k
  C4,             // per k != (n-1)/2
  C5,
  C6,
  C7,
  C8,   // n ≡ 1 (mod 4)
  C9,   // n ≡ 1 (mod 4)
  C10,  // n ≡ 3 (mod 4)
  C11,  // n ≡ 3 (mod 4)
};

/// Verdict record for one named check at one n. `holds` is decided by exact
/// arithmetic only; there is no tolerance anywhere.
struct CheckResult {
  std::string name;
  long n = 0;
  long power = 0;
  std::map<std::string, long> params;
  bool holds = false;
  /// Phi_n-adic valuation of LHS - RHS. kValInf means exact equality. The
  /// folded-ring route caps the reported value (see `valuation_capped`).
  long valuation = 0;
  bool valuation_capped = false;
  double ms = 0.0;
  std::string detail;
};

std::string check_name(SeriesId id);
std::string step_name(StepId id);
/// Native modulus power of a series check (2 for a1/a2/anew4/b1/c1, else 1).
long native_power(SeriesId id);

// ---- series checks -------------------------------------------------------

/// Exact LHS sum_{k=0}^{n-1} as a canonical rational function. n odd >= 1;
/// WangYu additionally requires n > 2|d| - 1. Cost grows quickly; intended
/// for moderate n (the congruence checks use the folded-ring route instead).
RatFunc series_lhs(SeriesId id, long n, CyclotomicCache& cache, long d = 0);
/// The signed monomial right-hand side.
RatFunc series_rhs(SeriesId id, long n, long d = 0);

/// Full congruence check. Exact Q(q) route for small n, folded-ring route
/// beyond `exact_threshold`.
CheckResult check_series(SeriesId id, long n, long m, CyclotomicCache& cache, long d = 0,
                         long exact_threshold = 15);

// ---- Carlitz's identity --------------------------------------------------

/// Both sides of the two-parameter transformation with a, b monomials and the
/// substitution q -> q^base_power, compared exactly in Q(q). Rejects a = 1.
CheckResult carlitz_check(long n, MonomialParam a, MonomialParam b, long base_power);
/// Evaluated form at exact rational a, b, q (specialization cross-check).
/// Throws DomainError when a parameter hits a vanishing denominator.
bool carlitz_eval_rational(long n, const Rat& a, const Rat& b, const Rat& q);

// ---- proof-chain summands ------------------------------------------------

RatFunc a_nk(long n, long k);  // summand of the section-2 Carlitz specialization
RatFunc b_nk(long n, long k);  // its mod-Phi_n^2 simplification
RatFunc c_nk(long n, long k);  // section-3 summand; equals q^{2k} a_nk

// ---- proof-chain steps ---------------------------------------------------

/// One step at one n (odd, >= 3). `param` carries k (QbinomNegK, B3, B5, C3,
/// C4) or s (QpowLemma); steps quantified over all valid k accept
/// param = nullopt and verify every k.
CheckResult proof_step(StepId step, long n, CyclotomicCache& cache,
                       std::optional<long> param = std::nullopt);

/// Every section-2 (and/or section-3) step for this n, in paper order.
std::vector<CheckResult> proof_chain(long n, int section, CyclotomicCache& cache);

// ---- classical integer congruences --------------------------------------

struct ClassicalParams {
  long p = 3;    // odd prime (validated by trial division)
  long r = 1;    // exponent of the summation range p^r
  long power = 1;  // modulus p^power, power in {1, 2}
};

/// sum_{k=0}^{p^r-1} C(2k,k) / 2^k ≡ (-1)^{(p^r-1)/2} (mod p^power).
CheckResult classical_check(const ClassicalParams& params);

/// Evaluates the q-series LHS at q = 1 and checks it against the classical
/// sum modulo p^power (power = native modulus power of `id`).
CheckResult q_to_1_consistency(SeriesId id, long p, long r, CyclotomicCache& cache);

}  // namespace qcong
