#include "sigma_poly.hpp"

#include <algorithm>

#include "qwkb/errors.hpp"

namespace qwkb::coeffs::detail {

SigmaPoly SigmaPoly::monomial(const Rational& c, int degree) {
  SigmaPoly p;
  if (c.is_zero()) return p;
  p.c_.assign(static_cast<std::size_t>(degree) + 1, Rational(0));
  p.c_.back() = c;
  return p;
}

void SigmaPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

ExactCoeff SigmaPoly::to_exact(int k) const {
  ExactCoeff r;
  for (int j = 0; j <= degree(); ++j)
    if (!c_[static_cast<std::size_t>(j)].is_zero())
      r += ExactCoeff::monomial(c_[static_cast<std::size_t>(j)], 2 * j - 3 * k, 4 * k - 4 * j);
  return r;
}

SigmaPoly SigmaPoly::from_exact(const ExactCoeff& c, int k) {
  SigmaPoly p;
  for (const auto& t : c.terms()) {
    const int j2 = t.pi_power + 3 * k;
    if (j2 % 2 != 0 || j2 < 0 || t.gamma_power != 4 * k - 2 * j2)
      throw CapacityError("coefficient is not homogeneous of order " + std::to_string(k));
    p = p + monomial(t.coeff, j2 / 2);
  }
  return p;
}

SigmaPoly operator+(const SigmaPoly& a, const SigmaPoly& b) {
  SigmaPoly r;
  r.c_.resize(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < r.c_.size(); ++i) {
    if (i < a.c_.size()) r.c_[i] += a.c_[i];
    if (i < b.c_.size()) r.c_[i] += b.c_[i];
  }
  r.trim();
  return r;
}

SigmaPoly operator-(const SigmaPoly& a, const SigmaPoly& b) { return a + b * Rational(-1); }

SigmaPoly operator*(const SigmaPoly& a, const SigmaPoly& b) {
  SigmaPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      if (!b.c_[j].is_zero()) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  r.trim();
  return r;
}

SigmaPoly operator*(const SigmaPoly& a, const Rational& q) {
  SigmaPoly r;
  if (q.is_zero()) return r;
  r.c_ = a.c_;
  for (auto& v : r.c_) v *= q;
  return r;
}

}  // namespace qwkb::coeffs::detail
