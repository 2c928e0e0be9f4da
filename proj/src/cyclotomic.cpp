#include "qcong/cyclotomic.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace qcong {

namespace {
std::vector<std::pair<long, int>> factorize(long n) {
  std::vector<std::pair<long, int>> out;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.emplace_back(p, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}
}  // namespace

std::vector<long> divisors(long n) {
  if (n < 1) throw DomainError("divisors: n must be >= 1");
  std::vector<long> out{1};
  for (auto [p, e] : factorize(n)) {
    std::size_t old = out.size();
    long pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < old; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int moebius(long n) {
  if (n < 1) throw DomainError("moebius: n must be >= 1");
  int sign = 1;
  for (auto [p, e] : factorize(n)) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

long totient(long n) {
  if (n < 1) throw DomainError("totient: n must be >= 1");
  long t = n;
  for (auto [p, e] : factorize(n)) t = t / p * (p - 1);
  return t;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

const IntPoly& CyclotomicCache::get(long n) {
  if (n < 1) throw DomainError("cyclotomic: n must be >= 1");
  auto it = table_.find(n);
  if (it != table_.end()) return it->second;
  if (frozen_) throw DomainError("cyclotomic cache is frozen and does not hold n=" + std::to_string(n));
  // (q^n - 1) / prod of the proper-divisor cyclotomics.
  IntPoly quotient = IntPoly::one_minus(1, n) * Int(-1);  // q^n - 1
  for (long d : divisors(n)) {
    if (d == n) continue;
    quotient = quotient.exact_div(get(d));
  }
  return table_.emplace(n, std::move(quotient)).first->second;
}

const IntPoly& CyclotomicCache::get_frozen(long n) const {
  auto it = table_.find(n);
  if (it == table_.end()) throw DomainError("cyclotomic cache miss for n=" + std::to_string(n));
  return it->second;
}

void CyclotomicCache::warm_up(long max_n) {
  if (frozen_) throw DomainError("cyclotomic cache is frozen");
  for (long n = 1; n <= max_n; ++n) get(n);
}

void CyclotomicCache::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write cyclotomic cache: " + path);
  for (const auto& [n, poly] : table_) out << n << '\t' << poly.to_string() << '\n';
}

void CyclotomicCache::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) return;  // absent cache file is not an error
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) throw ParseError("cyclotomic cache line without tab: " + line);
    long n = std::stol(line.substr(0, tab));
    IntPoly poly = IntPoly::parse(line.substr(tab + 1));
    if (poly.degree() != totient(n) || poly.leading() != 1)
      throw ParseError("cyclotomic cache entry for n=" + std::to_string(n) + " fails validation");
    table_.emplace(n, std::move(poly));
  }
}

IntPoly cyclotomic(long n, CyclotomicCache& cache) { return cache.get(n); }

IntPoly cyclotomic_oracle(long n) {
  if (n < 1) throw DomainError("cyclotomic_oracle: n must be >= 1");
  IntPoly numer(Int(1)), denom(Int(1));
  for (long d : divisors(n)) {
    int mu = moebius(d);
    if (mu == 0) continue;
    IntPoly factor = IntPoly::one_minus(1, n / d) * Int(-1);  // q^{n/d} - 1
    if (mu == 1)
      numer *= factor;
    else
      denom *= factor;
  }
  return numer.exact_div(denom);
}

}  // namespace qcong
