#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qwkb/arith/big_real.hpp"
#include "qwkb/arith/rational.hpp"

namespace qwkb::arith {

struct Monomial {
  Rational coeff;
  int pi_power = 0;
  int gamma_power = 0;
};

// Finite sum of rational multiples of pi^i * gamma^j with gamma = Gamma(1/4).
// Terms are merged by (i, j) and zero coefficients are dropped, so zero is the
// empty sum.
class ExactCoeff {
 public:
  ExactCoeff() = default;
  ExactCoeff(const Rational& q);  // NOLINT(google-explicit-constructor)
  ExactCoeff(long v) : ExactCoeff(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  static ExactCoeff monomial(const Rational& q, int pi_power, int gamma_power);

  std::vector<Monomial> terms() const;
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_rational() const;
  // Coefficient of pi^i gamma^j (zero when absent).
  Rational coeff(int pi_power, int gamma_power) const;

  // Evaluates to `bits` of precision, raising the internal precision until
  // cancellation between terms no longer eats into the result.
  BigReal eval(long bits) const;
  // Terms joined as "q*pi^i*gamma^j".
  std::string to_string() const;

  ExactCoeff& operator+=(const ExactCoeff& o);
  ExactCoeff& operator-=(const ExactCoeff& o);
  ExactCoeff& operator*=(const ExactCoeff& o);
  ExactCoeff& operator*=(const Rational& q);

  friend ExactCoeff operator+(ExactCoeff a, const ExactCoeff& b) { return a += b; }
  friend ExactCoeff operator-(ExactCoeff a, const ExactCoeff& b) { return a -= b; }
  friend ExactCoeff operator*(ExactCoeff a, const ExactCoeff& b) { return a *= b; }
  friend ExactCoeff operator*(ExactCoeff a, const Rational& q) { return a *= q; }
  friend ExactCoeff operator*(const Rational& q, ExactCoeff a) { return a *= q; }
  friend ExactCoeff operator-(const ExactCoeff& a) { return a * Rational(-1); }
  friend bool operator==(const ExactCoeff& a, const ExactCoeff& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(std::pair<int, int> key, const Rational& q);

  std::map<std::pair<int, int>, Rational> terms_;
};

}  // namespace qwkb::arith
