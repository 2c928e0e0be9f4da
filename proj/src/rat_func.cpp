#include "qcong/rat_func.hpp"

#include <utility>

namespace qcong {

namespace {
// Strips the common polynomial gcd and the common integer content; makes the
// leading coefficient of the denominator positive.
void canonicalize(IntPoly& num, IntPoly& den) {
  if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (num.is_zero()) {
    den = IntPoly(Int(1));
    return;
  }
  IntPoly g = poly_gcd(num, den);
  if (g.degree() > 0) {
    num = num.exact_div(g);
    den = den.exact_div(g);
  }
  Int c = gcd(num.content(), den.content());
  if (sgn(den.leading()) < 0) c = -c;
  if (c != 1) {
    std::vector<Int> nc, dc;
    nc.reserve(num.coeffs().size());
    dc.reserve(den.coeffs().size());
    for (const Int& x : num.coeffs()) nc.push_back(x / c);
    for (const Int& x : den.coeffs()) dc.push_back(x / c);
    num = IntPoly(std::move(nc));
    den = IntPoly(std::move(dc));
  }
}
}  // namespace

RatFunc::RatFunc(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
  canonicalize(num_, den_);
}

RatFunc::RatFunc(const Rat& r)
    : num_(Int(r.get_num())), den_(Int(r.get_den())) {}

RatFunc RatFunc::q_power(long e) {
  if (e >= 0) return RatFunc(IntPoly::monomial(Int(1), e));
  return from_canonical(IntPoly(Int(1)), IntPoly::monomial(Int(1), -e));
}

RatFunc RatFunc::from_canonical(IntPoly num, IntPoly den) {
  RatFunc f;
  f.num_ = std::move(num);
  f.den_ = std::move(den);
  return f;
}

RatFunc RatFunc::operator-() const { return from_canonical(-num_, den_); }

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw DivisionByZero();
  return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  if (sgn(num_.leading()) < 0) return from_canonical(-den_, -num_);
  return from_canonical(den_, num_);
}

RatFunc RatFunc::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  RatFunc acc(IntPoly(Int(1)));
  RatFunc base = *this;
  unsigned long u = static_cast<unsigned long>(e);
  while (u > 0) {
    if (u & 1) acc *= base;
    u >>= 1;
    if (u > 0) base *= base;
  }
  return acc;
}

RatFunc RatFunc::subst_qinv() const {
  if (is_zero()) return RatFunc();
  // f(1/q) = rev(num) * q^{deg den + v_den} / (rev(den) * q^{deg num + v_num})
  // up to a shared monomial; build the reversed coefficient vectors and let
  // the canonical constructor settle the monomial bookkeeping.
  auto reverse = [](const IntPoly& p) {
    std::vector<Int> out(p.coeffs().rbegin(), p.coeffs().rend());
    return IntPoly(std::move(out));
  };
  IntPoly rn = reverse(num_);
  IntPoly rd = reverse(den_);
  long dn = num_.degree(), dd = den_.degree();
  if (dd >= dn) return RatFunc(rn.shifted(dd - dn), rd);
  return RatFunc(rn, rd.shifted(dn - dd));
}

Rat RatFunc::eval(const Rat& x) const {
  Rat d = den_.eval(x);
  if (sgn(d) == 0) throw PoleAtPoint();
  return Rat(num_.eval(x) / d);
}

std::string RatFunc::to_string() const {
  if (is_polynomial()) return num_.to_string();
  auto terms = [](const IntPoly& p) {
    std::size_t t = 0;
    for (const Int& c : p.coeffs())
      if (sgn(c) != 0) ++t;
    return t;
  };
  std::string d = den_.to_string();
  bool paren_den = terms(den_) > 1;
  std::string n = num_.to_string();
  bool paren_num = terms(num_) > 1;
  std::string out = paren_num ? "(" + n + ")" : n;
  out += " / ";
  out += paren_den ? "(" + d + ")" : d;
  return out;
}

}  // namespace qcong
