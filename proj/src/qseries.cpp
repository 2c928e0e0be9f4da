#include "qcong/qseries.hpp"

#include <sstream>

namespace qcong {

std::string MonomialParam::to_string() const {
  std::ostringstream out;
  if (sign < 0) out << "-";
  if (exponent == 0)
    out << "1";
  else if (exponent == 1)
    out << "q";
  else
    out << "q^" << exponent;
  return out.str();
}

MonomialParam MonomialParam::parse(std::string_view text) {
  MonomialParam m;
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    if (text[pos] == '-') m.sign = -1;
    ++pos;
  }
  if (pos < text.size() && text[pos] == '1' && pos + 1 == text.size()) {
    m.exponent = 0;
    return m;
  }
  if (pos >= text.size() || text[pos] != 'q') throw ParseError("monomial: expected 'q' or '1'");
  ++pos;
  if (pos == text.size()) {
    m.exponent = 1;
    return m;
  }
  if (text[pos] != '^') throw ParseError("monomial: expected '^'");
  ++pos;
  if (pos == text.size()) throw ParseError("monomial: missing exponent");
  long e = 0;
  for (; pos < text.size(); ++pos) {
    if (text[pos] < '0' || text[pos] > '9') throw ParseError("monomial: bad exponent digit");
    e = e * 10 + (text[pos] - '0');
  }
  m.exponent = e;
  return m;
}

IntPoly q_int(long n) {
  if (n < 1) throw DomainError("q_int: n must be >= 1");
  std::vector<Int> coeffs(static_cast<std::size_t>(n), Int(1));
  return IntPoly(std::move(coeffs));
}

IntPoly pochhammer(MonomialParam a, long s, long k) {
  if (s < 1) throw DomainError("pochhammer: base power s must be >= 1");
  if (k < 0) throw DomainError("pochhammer: k must be >= 0");
  IntPoly p(Int(1));
  for (long i = 0; i < k; ++i) p.mul_one_minus(a.sign, a.exponent + s * i);
  return p;
}

IntPoly q_binomial(long n, long k, long s) {
  if (n < 0) throw DomainError("q_binomial: n must be >= 0");
  if (s < 1) throw DomainError("q_binomial: base power s must be >= 1");
  if (k < 0 || k > n) return IntPoly();
  // Ratio form: prod_{i=1}^{k} (1 - q^{s(n-k+i)}) / (1 - q^{si}), divided
  // exactly factor by factor. The integrality assertion is a self-test.
  IntPoly acc(Int(1));
  for (long i = 1; i <= k; ++i) {
    acc.mul_one_minus(1, s * (n - k + i));
    IntPoly quotient;
    if (!acc.try_exact_div(IntPoly::one_minus(1, s * i), quotient))
      throw InternalNonIntegral("q_binomial: exact division failed (implementation bug)");
    acc = std::move(quotient);
  }
  return acc;
}

}  // namespace qcong
