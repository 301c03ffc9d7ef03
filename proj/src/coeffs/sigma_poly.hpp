#pragma once

#include <vector>

#include "qwkb/arith/exact_coeff.hpp"
#include "qwkb/arith/rational.hpp"

namespace qwkb::coeffs::detail {

using arith::ExactCoeff;
using arith::Rational;

// Polynomial in sigma = pi^2 / gamma^4 with rational coefficients. The WKB
// coefficient of order k is X^k p(sigma) with X = gamma^4 / pi^3, so series
// work can drop X and run on these polynomials alone.
class SigmaPoly {
 public:
  SigmaPoly() = default;
  explicit SigmaPoly(const Rational& c) {
    if (!c.is_zero()) c_.push_back(c);
  }
  static SigmaPoly monomial(const Rational& c, int degree);

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  Rational at(int j) const { return j >= 0 && j <= degree() ? c_[static_cast<std::size_t>(j)] : Rational(0); }

  // X^k p(sigma) as pi/gamma monomials.
  ExactCoeff to_exact(int k) const;
  // Inverse of to_exact; throws CapacityError when c is not of that shape.
  static SigmaPoly from_exact(const ExactCoeff& c, int k);

  friend SigmaPoly operator+(const SigmaPoly& a, const SigmaPoly& b);
  friend SigmaPoly operator-(const SigmaPoly& a, const SigmaPoly& b);
  friend SigmaPoly operator*(const SigmaPoly& a, const SigmaPoly& b);
  friend SigmaPoly operator*(const SigmaPoly& a, const Rational& q);
  friend bool operator==(const SigmaPoly& a, const SigmaPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Rational> c_;
};

}  // namespace qwkb::coeffs::detail
