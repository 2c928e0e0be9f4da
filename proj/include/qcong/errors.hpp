#pragma once

#include <stdexcept>
#include <string>

namespace qcong {

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero") {}
  explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

struct NotDivisible : std::domain_error {
  NotDivisible() : std::domain_error("exact division failed") {}
  explicit NotDivisible(const std::string& what) : std::domain_error(what) {}
};

struct BothZero : std::domain_error {
  BothZero() : std::domain_error("gcd of two zero polynomials") {}
};

struct PoleAtPoint : std::domain_error {
  PoleAtPoint() : std::domain_error("evaluation at a pole of the denominator") {}
};

struct NotInvertible : std::domain_error {
  NotInvertible() : std::domain_error("element shares a factor with the modulus") {}
  explicit NotInvertible(const std::string& what) : std::domain_error(what) {}
};

struct NotPrime : std::domain_error {
  explicit NotPrime(const std::string& what) : std::domain_error(what) {}
};

struct EvenPrimeRejected : std::domain_error {
  EvenPrimeRejected() : std::domain_error("p = 2 is rejected; the congruences require an odd prime") {}
};

struct DomainError : std::domain_error {
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct InternalNonIntegral : std::logic_error {
  explicit InternalNonIntegral(const std::string& what) : std::logic_error(what) {}
};

}  // namespace qcong
