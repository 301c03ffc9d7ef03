#include "qwkb/arith/exact_coeff.hpp"

#include <algorithm>

#include "qwkb/arith/special.hpp"

namespace qwkb::arith {

ExactCoeff::ExactCoeff(const Rational& q) { add_term({0, 0}, q); }

ExactCoeff ExactCoeff::monomial(const Rational& q, int pi_power, int gamma_power) {
  ExactCoeff c;
  c.add_term({pi_power, gamma_power}, q);
  return c;
}

void ExactCoeff::add_term(std::pair<int, int> key, const Rational& q) {
  if (q.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, q);
  if (!inserted) {
    it->second += q;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::vector<Monomial> ExactCoeff::terms() const {
  std::vector<Monomial> out;
  out.reserve(terms_.size());
  for (const auto& [key, q] : terms_) out.push_back({q, key.first, key.second});
  return out;
}

bool ExactCoeff::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == std::pair<int, int>{0, 0});
}

Rational ExactCoeff::coeff(int pi_power, int gamma_power) const {
  auto it = terms_.find({pi_power, gamma_power});
  return it == terms_.end() ? Rational(0) : it->second;
}

BigReal ExactCoeff::eval(long bits) const {
  require_precision(bits);
  if (terms_.empty()) return BigReal(bits);
  if (is_rational()) return BigReal(terms_.begin()->second, bits);
  for (long guard = 64;; guard *= 2) {
    const long w = bits + guard;
    const BigReal pi = const_pi(w);
    const BigReal g = const_gamma(w);
    BigReal sum(w);
    long max_exp = 0;
    bool first = true;
    for (const auto& [key, q] : terms_) {
      BigReal t = BigReal(q, w) * pow(pi, key.first) * pow(g, key.second);
      const long e = static_cast<long>(mpfr_get_exp(t.get()));
      max_exp = first ? e : std::max(max_exp, e);
      first = false;
      sum += t;
    }
    const long lost = sum.is_zero() ? w : max_exp - static_cast<long>(mpfr_get_exp(sum.get()));
    if (lost + 8 <= guard) return sum.with_precision(bits);
    if (guard > 16 * bits + 4096) return sum.with_precision(bits);
  }
}

std::string ExactCoeff::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [key, q] : terms_) {
    std::string t = q.to_string();
    if (!out.empty()) out += t.front() == '-' ? " - " + t.substr(1) : " + " + t;
    else out = t;
    if (key.first != 0) out += "*pi^" + std::to_string(key.first);
    if (key.second != 0) out += "*gamma^" + std::to_string(key.second);
  }
  return out;
}

ExactCoeff& ExactCoeff::operator+=(const ExactCoeff& o) {
  for (const auto& [key, q] : o.terms_) add_term(key, q);
  return *this;
}

ExactCoeff& ExactCoeff::operator-=(const ExactCoeff& o) {
  for (const auto& [key, q] : o.terms_) add_term(key, -q);
  return *this;
}

ExactCoeff& ExactCoeff::operator*=(const ExactCoeff& o) {
  ExactCoeff r;
  for (const auto& [ka, qa] : terms_)
    for (const auto& [kb, qb] : o.terms_) r.add_term({ka.first + kb.first, ka.second + kb.second}, qa * qb);
  terms_ = std::move(r.terms_);
  return *this;
}

ExactCoeff& ExactCoeff::operator*=(const Rational& q) {
  if (q.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, v] : terms_) v *= q;
  return *this;
}

}  // namespace qwkb::arith
