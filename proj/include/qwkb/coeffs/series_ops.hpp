#pragma once

#include <cstddef>
#include <vector>

#include "qwkb/arith/rational.hpp"

// Truncated formal power series over any ring T that supports +, -, * and
// multiplication by Rational. Index i holds the coefficient of t^i.
namespace qwkb::coeffs::ops {

using arith::Rational;

// (sum_i b_i t^i)^r with b_0 = 1, through t^n (J.C.P. Miller recurrence).
template <class T>
std::vector<T> pow_unit(const std::vector<T>& b, const Rational& r, int n, const T& one, const T& zero) {
  std::vector<T> c(static_cast<std::size_t>(n) + 1, zero);
  c[0] = one;
  for (int k = 1; k <= n; ++k) {
    T acc = zero;
    for (int i = 1; i <= k && i < static_cast<int>(b.size()); ++i) {
      const Rational w = (r + Rational(1)) * Rational(i) - Rational(k);
      if (!w.is_zero()) acc = acc + b[i] * c[k - i] * w;
    }
    c[k] = acc * (Rational(1) / Rational(k));
  }
  return c;
}

// exp(sum_{j>=1} s_j t^j) through t^n; s_0 is ignored.
template <class T>
std::vector<T> exp_series(const std::vector<T>& s, int n, const T& one, const T& zero) {
  std::vector<T> e(static_cast<std::size_t>(n) + 1, zero);
  e[0] = one;
  for (int k = 1; k <= n; ++k) {
    T acc = zero;
    for (int j = 1; j <= k && j < static_cast<int>(s.size()); ++j) acc = acc + s[j] * e[k - j] * Rational(j);
    e[k] = acc * (Rational(1) / Rational(k));
  }
  return e;
}

// Cauchy product through t^n.
template <class T>
std::vector<T> mul(const std::vector<T>& a, const std::vector<T>& b, int n, const T& zero) {
  std::vector<T> c(static_cast<std::size_t>(n) + 1, zero);
  for (int i = 0; i <= n && i < static_cast<int>(a.size()); ++i)
    for (int j = 0; i + j <= n && j < static_cast<int>(b.size()); ++j) c[i + j] = c[i + j] + a[i] * b[j];
  return c;
}

// 1 / (sum_i a_i t^i) with a_0 = 1, through t^n.
template <class T>
std::vector<T> inverse_unit(const std::vector<T>& a, int n, const T& one, const T& zero) {
  std::vector<T> c(static_cast<std::size_t>(n) + 1, zero);
  c[0] = one;
  for (int k = 1; k <= n; ++k) {
    T acc = zero;
    for (int j = 1; j <= k && j < static_cast<int>(a.size()); ++j) acc = acc + a[j] * c[k - j];
    c[k] = zero - acc;
  }
  return c;
}

}  // namespace qwkb::coeffs::ops
