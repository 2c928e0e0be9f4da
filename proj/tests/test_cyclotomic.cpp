#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <string>

#include "qcong/cyclotomic.hpp"

using namespace qcong;

namespace {

IntPoly P(const char* text) { return IntPoly::parse(text); }

}  // namespace

TEST_CASE("number-theoretic helpers") {
  CHECK(divisors(12) == std::vector<long>({1, 2, 3, 4, 6, 12}));
  CHECK(divisors(1) == std::vector<long>({1}));
  CHECK(divisors(49) == std::vector<long>({1, 7, 49}));

  CHECK(moebius(1) == 1);
  CHECK(moebius(2) == -1);
  CHECK(moebius(4) == 0);
  CHECK(moebius(6) == 1);
  CHECK(moebius(30) == -1);
  CHECK(moebius(12) == 0);

  CHECK(totient(1) == 1);
  CHECK(totient(9) == 6);
  CHECK(totient(12) == 4);
  CHECK(totient(97) == 96);

  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));

  // Mobius sum over divisors is the indicator of n = 1.
  for (long n = 1; n <= 200; ++n) {
    long s = 0;
    for (long d : divisors(n)) s += moebius(d);
    CHECK(s == (n == 1 ? 1 : 0));
  }
  // Totient sum over divisors is n.
  for (long n = 1; n <= 200; ++n) {
    long s = 0;
    for (long d : divisors(n)) s += totient(d);
    CHECK(s == n);
  }
}

TEST_CASE("small cyclotomic polynomials") {
  CyclotomicCache cache;
  CHECK(cyclotomic(1, cache) == P("-1 + q"));
  CHECK(cyclotomic(2, cache) == P("1 + q"));
  CHECK(cyclotomic(6, cache) == P("1 - q + q^2"));
  CHECK(cyclotomic(12, cache) == P("1 - q^2 + q^4"));
  // Phi_p = 1 + q + ... + q^(p-1) for prime p.
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 101L}) {
    IntPoly expected;
    for (long i = 0; i < p; ++i) expected += IntPoly::monomial(Int(1), i);
    CHECK(cyclotomic(p, cache) == expected);
  }
  // Phi_{2p}(q) = Phi_p(-q) up to sign convention: alternating coefficients.
  CHECK(cyclotomic(10, cache) == P("1 - q + q^2 - q^3 + q^4"));
}

TEST_CASE("agreement with the Moebius-formula oracle") {
  CyclotomicCache cache;
  for (long n = 1; n <= 120; ++n) {
    CHECK(cyclotomic(n, cache) == cyclotomic_oracle(n));
    CHECK(cyclotomic(n, cache).degree() == totient(n));
  }
}

TEST_CASE("product over divisors reconstructs q^n - 1") {
  CyclotomicCache cache;
  for (long n = 1; n <= 120; ++n) {
    IntPoly prod(Int(1));
    for (long d : divisors(n)) prod *= cyclotomic(d, cache);
    IntPoly expected = IntPoly::monomial(Int(1), n) - IntPoly(Int(1));
    CHECK(prod == expected);
  }
}

TEST_CASE("value at q = 1") {
  // Phi_1(1) = 0; Phi_{p^k}(1) = p; Phi_n(1) = 1 when n has >= 2 prime factors.
  CyclotomicCache cache;
  CHECK(cyclotomic(1, cache).eval(Rat(1)) == 0);
  CHECK(cyclotomic(5, cache).eval(Rat(1)) == 5);
  CHECK(cyclotomic(9, cache).eval(Rat(1)) == 3);
  CHECK(cyclotomic(8, cache).eval(Rat(1)) == 2);
  CHECK(cyclotomic(49, cache).eval(Rat(1)) == 7);
  CHECK(cyclotomic(6, cache).eval(Rat(1)) == 1);
  CHECK(cyclotomic(12, cache).eval(Rat(1)) == 1);
  CHECK(cyclotomic(105, cache).eval(Rat(1)) == 1);
}

TEST_CASE("palindromic coefficients for n > 1") {
  CyclotomicCache cache;
  for (long n = 2; n <= 120; ++n) {
    const IntPoly& phi = cache.get(n);
    const long d = phi.degree();
    for (long i = 0; i <= d; ++i) CHECK(phi.coeff(i) == phi.coeff(d - i));
  }
}

TEST_CASE("cache freeze semantics") {
  CyclotomicCache cache;
  cache.warm_up(20);
  CHECK(cache.size() == 20);
  cache.freeze();
  CHECK(cache.frozen());
  CHECK(cache.get_frozen(12) == P("1 - q^2 + q^4"));
  CHECK_THROWS_AS(cache.get_frozen(21), DomainError);
}

TEST_CASE("cache save / load round trip") {
  CyclotomicCache cache;
  cache.warm_up(30);
  const std::string path = "cyclo_cache_test.txt";
  cache.save(path);

  CyclotomicCache loaded;
  loaded.load(path);
  CHECK(loaded.size() == cache.size());
  for (long n = 1; n <= 30; ++n) CHECK(loaded.get(n) == cache.get(n));
  std::remove(path.c_str());
}
