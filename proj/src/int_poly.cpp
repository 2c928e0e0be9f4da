#include "qcong/int_poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qcong {

long IntPoly::karatsuba_threshold = 64;

namespace {
const Int kZero(0);

// Schoolbook product of coefficient ranges.
void mul_basecase(const Int* a, long na, const Int* b, long nb, Int* out) {
  for (long i = 0; i < na; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (long j = 0; j < nb; ++j) out[i + j] += a[i] * b[j];
  }
}

// out (size na+nb-1, zero-initialized) += a * b, Karatsuba above threshold.
void mul_rec(const Int* a, long na, const Int* b, long nb, Int* out) {
  if (na == 0 || nb == 0) return;
  if (std::min(na, nb) <= IntPoly::karatsuba_threshold) {
    mul_basecase(a, na, b, nb, out);
    return;
  }
  long h = std::max(na, nb) / 2;
  if (na <= h) {
    // b splits, a does not: a*(b0 + q^h b1)
    mul_rec(a, na, b, std::min(h, nb), out);
    if (nb > h) mul_rec(a, na, b + h, nb - h, out + h);
    return;
  }
  if (nb <= h) {
    mul_rec(a, std::min(h, na), b, nb, out);
    if (na > h) mul_rec(a + h, na - h, b, nb, out + h);
    return;
  }
  // a = a0 + q^h a1, b = b0 + q^h b1
  long na0 = h, na1 = na - h, nb0 = h, nb1 = nb - h;
  std::vector<Int> z0(na0 + nb0 - 1), z2(na1 + nb1 - 1);
  mul_rec(a, na0, b, nb0, z0.data());
  mul_rec(a + h, na1, b + h, nb1, z2.data());
  long ns = std::max(na0, na1), nt = std::max(nb0, nb1);
  std::vector<Int> s(ns), t(nt);
  for (long i = 0; i < na0; ++i) s[i] = a[i];
  for (long i = 0; i < na1; ++i) s[i] += a[h + i];
  for (long i = 0; i < nb0; ++i) t[i] = b[i];
  for (long i = 0; i < nb1; ++i) t[i] += b[h + i];
  std::vector<Int> z1(ns + nt - 1);
  mul_rec(s.data(), ns, t.data(), nt, z1.data());
  for (std::size_t i = 0; i < z0.size(); ++i) z1[i] -= z0[i];
  for (std::size_t i = 0; i < z2.size(); ++i) z1[i] -= z2[i];
  for (std::size_t i = 0; i < z0.size(); ++i) out[i] += z0[i];
  for (std::size_t i = 0; i < z1.size(); ++i) out[h + i] += z1[i];
  for (std::size_t i = 0; i < z2.size(); ++i) out[2 * h + i] += z2[i];
}
}  // namespace

IntPoly::IntPoly(Int constant) {
  if (sgn(constant) != 0) coeffs_.push_back(std::move(constant));
}

IntPoly::IntPoly(std::initializer_list<Int> ascending_coeffs) : coeffs_(ascending_coeffs) {
  normalize();
}

IntPoly::IntPoly(std::vector<Int> ascending_coeffs) : coeffs_(std::move(ascending_coeffs)) {
  normalize();
}

IntPoly IntPoly::monomial(Int coeff, long exponent) {
  IntPoly p;
  if (sgn(coeff) != 0) {
    p.coeffs_.assign(static_cast<std::size_t>(exponent) + 1, kZero);
    p.coeffs_.back() = std::move(coeff);
  }
  return p;
}

IntPoly IntPoly::one_minus(int sign, long exponent) {
  if (exponent == 0) return IntPoly(Int(1 - sign));
  IntPoly p = monomial(Int(-sign), exponent);
  p.coeffs_[0] = 1;
  return p;
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

const Int& IntPoly::coeff(long i) const {
  if (i < 0 || i >= static_cast<long>(coeffs_.size())) return kZero;
  return coeffs_[static_cast<std::size_t>(i)];
}

const Int& IntPoly::leading() const {
  if (coeffs_.empty()) return kZero;
  return coeffs_.back();
}

IntPoly IntPoly::operator-() const {
  IntPoly r;
  r.coeffs_.reserve(coeffs_.size());
  for (const Int& c : coeffs_) r.coeffs_.push_back(-c);
  return r;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  IntPoly r;
  r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) {
    if (i < coeffs_.size()) r.coeffs_[i] += coeffs_[i];
    if (i < o.coeffs_.size()) r.coeffs_[i] += o.coeffs_[i];
  }
  r.normalize();
  return r;
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
  IntPoly r;
  r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) {
    if (i < coeffs_.size()) r.coeffs_[i] += coeffs_[i];
    if (i < o.coeffs_.size()) r.coeffs_[i] -= o.coeffs_[i];
  }
  r.normalize();
  return r;
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return IntPoly();
  IntPoly r;
  r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, kZero);
  mul_rec(coeffs_.data(), static_cast<long>(coeffs_.size()), o.coeffs_.data(),
          static_cast<long>(o.coeffs_.size()), r.coeffs_.data());
  r.normalize();
  return r;
}

IntPoly IntPoly::operator*(const Int& c) const {
  if (sgn(c) == 0) return IntPoly();
  IntPoly r;
  r.coeffs_.reserve(coeffs_.size());
  for (const Int& x : coeffs_) r.coeffs_.push_back(x * c);
  return r;
}

IntPoly IntPoly::pow(unsigned long e) const {
  IntPoly acc(Int(1));
  IntPoly base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return acc;
}

IntPoly IntPoly::shifted(long e) const {
  if (is_zero() || e == 0) return e == 0 ? *this : IntPoly();
  IntPoly r;
  r.coeffs_.assign(static_cast<std::size_t>(e), kZero);
  r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return r;
}

void IntPoly::mul_one_minus(int sign, long j) {
  if (is_zero()) return;
  if (j == 0) {
    if (sign == 1) {
      coeffs_.clear();
    } else {
      for (Int& c : coeffs_) c *= 2;
    }
    return;
  }
  std::size_t old = coeffs_.size();
  coeffs_.resize(old + static_cast<std::size_t>(j));
  for (std::size_t i = old; i-- > 0;) {
    if (sign > 0)
      coeffs_[i + static_cast<std::size_t>(j)] -= coeffs_[i];
    else
      coeffs_[i + static_cast<std::size_t>(j)] += coeffs_[i];
  }
  normalize();
}

long IntPoly::trailing_zeros() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) return static_cast<long>(i);
  return 0;
}

bool IntPoly::try_exact_div(const IntPoly& d, IntPoly& quotient) const {
  if (d.is_zero()) throw DivisionByZero();
  if (is_zero()) {
    quotient = IntPoly();
    return true;
  }
  if (degree() < d.degree()) return false;
  std::vector<Int> rem = coeffs_;
  long dd = d.degree();
  long qd = degree() - dd;
  std::vector<Int> q(static_cast<std::size_t>(qd) + 1);
  const Int& lead = d.leading();
  for (long i = qd; i >= 0; --i) {
    Int& top = rem[static_cast<std::size_t>(i + dd)];
    if (sgn(top) == 0) continue;
    Int c;
    mpz_fdiv_qr(c.get_mpz_t(), top.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    if (sgn(top) != 0) return false;  // leading coefficient does not divide
    q[static_cast<std::size_t>(i)] = c;
    for (long j = 0; j < dd; ++j) rem[static_cast<std::size_t>(i + j)] -= c * d.coeffs_[static_cast<std::size_t>(j)];
  }
  for (long j = 0; j < dd; ++j)
    if (sgn(rem[static_cast<std::size_t>(j)]) != 0) return false;
  quotient = IntPoly(std::move(q));
  return true;
}

IntPoly IntPoly::exact_div(const IntPoly& d) const {
  IntPoly q;
  if (!try_exact_div(d, q)) throw NotDivisible();
  return q;
}

Int IntPoly::content() const {
  Int g(0);
  for (const Int& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return IntPoly();
  Int c = content();
  if (sgn(leading()) < 0) c = -c;
  IntPoly r;
  r.coeffs_.reserve(coeffs_.size());
  for (const Int& x : coeffs_) r.coeffs_.push_back(x / c);
  return r;
}

Rat IntPoly::eval(const Rat& x) const {
  Rat acc(0);
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc *= x;
    acc += coeffs_[i];
  }
  return acc;
}

Int IntPoly::eval_int(const Int& x) const {
  Int acc(0);
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc *= x;
    acc += coeffs_[i];
  }
  return acc;
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Int& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    Int a = abs(c);
    if (first) {
      if (sgn(c) < 0) out << "-";
      first = false;
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    if (i == 0) {
      out << a.get_str();
    } else {
      if (a != 1) out << a.get_str() << "*";
      out << "q";
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

IntPoly IntPoly::parse(std::string_view text) {
  std::vector<Int> coeffs;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos == text.size()) throw ParseError("empty polynomial");
  bool first = true;
  while (true) {
    skip_ws();
    if (pos == text.size()) break;
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      if (first) {
        if (text[pos] == '-') sign = -1;
        ++pos;
      } else {
        sign = text[pos] == '-' ? -1 : 1;
        ++pos;
      }
      skip_ws();
    } else if (!first) {
      throw ParseError("expected '+' or '-' between terms");
    }
    first = false;
    // term: [integer]['*']['q'['^' exp]]
    Int coeff(1);
    bool have_coeff = false;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      coeff = Int(std::string(text.substr(start, pos - start)), 10);
      have_coeff = true;
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip_ws();
      }
    }
    long exp = 0;
    if (pos < text.size() && text[pos] == 'q') {
      ++pos;
      exp = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) throw ParseError("missing exponent after '^'");
        exp = std::stol(std::string(text.substr(start, pos - start)));
      }
    } else if (!have_coeff) {
      throw ParseError("expected coefficient or 'q'");
    }
    if (exp >= static_cast<long>(coeffs.size())) coeffs.resize(static_cast<std::size_t>(exp) + 1);
    coeffs[static_cast<std::size_t>(exp)] += sign * coeff;
  }
  return IntPoly(std::move(coeffs));
}

IntPoly poly_gcd(const IntPoly& p, const IntPoly& r) {
  if (p.is_zero() && r.is_zero()) throw BothZero();
  if (p.is_zero()) return r.primitive_part();
  if (r.is_zero()) return p.primitive_part();
  // Primitive PRS: strip contents every step so coefficients stay tame.
  IntPoly a = p.primitive_part();
  IntPoly b = r.primitive_part();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    // Remainder of a by b up to a content factor (scale-and-subtract);
    // the primitive part strips the accumulated scaling immediately.
    long db = b.degree();
    const Int& lead = b.leading();
    IntPoly rem = a;
    while (rem.degree() >= db) {
      long shift = rem.degree() - db;
      Int top = rem.leading();
      rem = rem * lead - b.shifted(shift) * top;
    }
    a = b;
    b = rem.is_zero() ? IntPoly() : rem.primitive_part();
  }
  return a.primitive_part();
}

}  // namespace qcong
