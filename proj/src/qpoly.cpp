#include "qcong/qpoly.hpp"

#include <algorithm>
#include <sstream>

namespace qcong {

namespace {
const Rat kZeroQ(0);
}

QPoly::QPoly(Rat constant) {
  if (sgn(constant) != 0) coeffs_.push_back(std::move(constant));
}

QPoly::QPoly(const IntPoly& p) {
  coeffs_.reserve(p.coeffs().size());
  for (const Int& c : p.coeffs()) coeffs_.emplace_back(c);
}

QPoly::QPoly(std::vector<Rat> ascending_coeffs) : coeffs_(std::move(ascending_coeffs)) {
  for (Rat& c : coeffs_) c.canonicalize();
  normalize();
}

QPoly QPoly::monomial(Rat coeff, long exponent) {
  QPoly p;
  if (sgn(coeff) != 0) {
    p.coeffs_.assign(static_cast<std::size_t>(exponent) + 1, kZeroQ);
    p.coeffs_.back() = std::move(coeff);
  }
  return p;
}

void QPoly::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

const Rat& QPoly::coeff(long i) const {
  if (i < 0 || i >= static_cast<long>(coeffs_.size())) return kZeroQ;
  return coeffs_[static_cast<std::size_t>(i)];
}

const Rat& QPoly::leading() const {
  if (coeffs_.empty()) return kZeroQ;
  return coeffs_.back();
}

QPoly QPoly::operator-() const {
  QPoly r;
  r.coeffs_.reserve(coeffs_.size());
  for (const Rat& c : coeffs_) r.coeffs_.push_back(-c);
  return r;
}

QPoly QPoly::operator+(const QPoly& o) const {
  QPoly r;
  r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) {
    if (i < coeffs_.size()) r.coeffs_[i] += coeffs_[i];
    if (i < o.coeffs_.size()) r.coeffs_[i] += o.coeffs_[i];
  }
  r.normalize();
  return r;
}

QPoly QPoly::operator-(const QPoly& o) const {
  QPoly r;
  r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) {
    if (i < coeffs_.size()) r.coeffs_[i] += coeffs_[i];
    if (i < o.coeffs_.size()) r.coeffs_[i] -= o.coeffs_[i];
  }
  r.normalize();
  return r;
}

QPoly QPoly::operator*(const QPoly& o) const {
  if (is_zero() || o.is_zero()) return QPoly();
  QPoly r;
  r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, kZeroQ);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  r.normalize();
  return r;
}

QPoly QPoly::operator*(const Rat& c) const {
  if (sgn(c) == 0) return QPoly();
  QPoly r;
  r.coeffs_.reserve(coeffs_.size());
  for (const Rat& x : coeffs_) r.coeffs_.push_back(x * c);
  return r;
}

QPoly QPoly::monic() const {
  if (is_zero()) return QPoly();
  return *this * Rat(Rat(1) / leading());
}

Rat QPoly::eval(const Rat& x) const {
  Rat acc(0);
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc *= x;
    acc += coeffs_[i];
  }
  return acc;
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rat& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    Rat a = abs(c);
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

bool QPoly::is_integral() const {
  for (const Rat& c : coeffs_)
    if (c.get_den() != 1) return false;
  return true;
}

IntPoly QPoly::to_int_poly() const {
  std::vector<Int> out;
  out.reserve(coeffs_.size());
  for (const Rat& c : coeffs_) {
    if (c.get_den() != 1) throw NotDivisible("rational coefficient is not an integer");
    out.push_back(c.get_num());
  }
  return IntPoly(std::move(out));
}

std::pair<QPoly, QPoly> poly_divrem(const QPoly& p, const QPoly& d) {
  if (d.is_zero()) throw DivisionByZero();
  if (p.degree() < d.degree()) return {QPoly(), p};
  std::vector<Rat> rem(p.coeffs());
  long dd = d.degree();
  long qd = p.degree() - dd;
  std::vector<Rat> q(static_cast<std::size_t>(qd) + 1);
  const Rat& lead = d.leading();
  for (long i = qd; i >= 0; --i) {
    Rat c = rem[static_cast<std::size_t>(i + dd)] / lead;
    if (sgn(c) == 0) continue;
    q[static_cast<std::size_t>(i)] = c;
    for (long j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i + j)] -= c * d.coeff(j);
  }
  return {QPoly(std::move(q)), QPoly(std::move(rem))};
}

std::pair<QPoly, QPoly> poly_divrem(const IntPoly& p, const IntPoly& d) {
  return poly_divrem(QPoly(p), QPoly(d));
}

std::pair<QPoly, QPoly> extended_gcd_first(const QPoly& a, const QPoly& b) {
  QPoly r0 = a, r1 = b;
  QPoly u0(Rat(1)), u1;
  while (!r1.is_zero()) {
    auto [q, r2] = poly_divrem(r0, r1);
    QPoly u2 = u0 - q * u1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  if (r0.is_zero()) return {QPoly(), QPoly()};
  Rat inv_lead = Rat(1) / r0.leading();
  return {r0 * inv_lead, u0 * inv_lead};
}

}  // namespace qcong
