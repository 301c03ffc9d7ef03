#include <map>

#include "qwkb/arith/special.hpp"
#include "qwkb/coeffs/families.hpp"
#include "qwkb/errors.hpp"

namespace qwkb::coeffs {

namespace {

using arith::gamma_shift_ratio;

// Riccati term R_k = sum_e c_e x^m P^e with P = 1 - x^4 and m = 2 - 3k - 4e,
// keyed by 2e.
using Terms = std::map<int, Rational>;

void accumulate(Terms& out, int key, const Rational& v) {
  if (v.is_zero()) return;
  auto [it, inserted] = out.try_emplace(key, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) out.erase(it);
  }
}

Terms derivative(const Terms& r, int k) {
  Terms out;
  for (const auto& [te, c] : r) {
    const int m = 2 - 3 * k - 2 * te;
    if (m != 0) accumulate(out, te, c * Rational(m));
    accumulate(out, te - 2, c * Rational(-2 * te));
  }
  return out;
}

void add_product(Terms& out, const Terms& a, const Terms& b, const Rational& scale) {
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) accumulate(out, ka + kb, ca * cb * scale);
}

// B((m+1)/4, e+1) / B(1/4, 3/2) with the transcendental factor 2 pi^2/gamma^4
// removed when n is odd.
Rational beta_ratio(int m, const Rational& e, bool odd) {
  const Rational u = Rational(m + 1, 4);
  const Rational tau = u + e + Rational(1);
  const Rational g_e = gamma_shift_ratio(e + Rational(1), Rational(3, 2));
  if (!odd) return gamma_shift_ratio(u, Rational(1, 4)) * g_e / gamma_shift_ratio(tau, Rational(7, 4));
  return gamma_shift_ratio(u, Rational(3, 4)) * g_e * Rational(3, 4) / gamma_shift_ratio(tau, Rational(1, 4));
}

}  // namespace

std::vector<ExactCoeff> wkb_action_coefficients(int n_max) {
  if (n_max < 0) throw RangeError("negative order");
  if (n_max > 2 * kCoeffCap)
    throw CapacityError("a_n generation is capped at order " + std::to_string(2 * kCoeffCap));
  const int k_max = 2 * n_max;
  std::vector<Terms> R;
  R.push_back(Terms{{1, Rational(1)}});
  for (int k = 1; k <= k_max; ++k) {
    Terms acc = derivative(R[k - 1], k - 1);
    const bool even = k % 2 == 0;
    if (!even)
      for (auto& [key, v] : acc) v *= Rational(-1);
    for (int i = 1; 2 * i <= k; ++i) {
      const int j = k - i;
      const Rational mult(i == j ? 1 : 2);
      const Rational sign = even ? Rational(i % 2 == 0 ? -1 : 1) : Rational(-1);
      add_product(acc, R[i], R[j], mult * sign);
    }
    Terms next;
    for (const auto& [te, c] : acc) next.emplace(te - 1, c / Rational(2));
    R.push_back(std::move(next));
  }
  std::vector<ExactCoeff> a;
  a.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    const int k = 2 * n;
    const bool odd = n % 2 == 1;
    Rational s;
    for (const auto& [te, c] : R[k]) {
      const int m = 2 - 3 * k - 2 * te;
      s += c * beta_ratio(m, Rational(te, 2), odd);
    }
    a.push_back(odd ? ExactCoeff::monomial(s * Rational(2), 2, -4) : ExactCoeff(s));
  }
  return a;
}

}  // namespace qwkb::coeffs
