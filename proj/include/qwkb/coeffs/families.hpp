#pragma once

#include <utility>
#include <vector>

#include "qwkb/arith/big_real.hpp"
#include "qwkb/arith/exact_coeff.hpp"
#include "qwkb/arith/rational.hpp"
#include "qwkb/coeffs/series.hpp"

namespace qwkb::coeffs {

// Highest order generated for a, b, d, c and q. The H series reaches twice this.
inline constexpr int kCoeffCap = 40;
inline constexpr int kFOrder = 4;

// Exact coefficients a_0..a_{n_max} of the implicit series
//   z = (eps/alpha)^{3/4} sum_n a_n (2 eps)^{-3n/2}.
// Each a_n is rational for even n and rational * pi^2/gamma^4 for odd n.
std::vector<ExactCoeff> wkb_action_coefficients(int n_max);

AsymSeries gen_a(int n_max, long bits);
// -(-1)^floor(n/2) (2/pi) (9 pi/gamma^4)^n (2n-2)!
BigReal asym_a(int n, long bits);

// Explicit series eps = alpha z^{4/3} sum_n b_n z^{-2n} by exact reversion.
AsymSeries gen_b_from_a(const AsymSeries& a, int n_max, long bits);
// (-1)^floor(n/2) 8 (2n-2)! / (3 pi (2 pi^2)^n)
BigReal asym_b(int n, long bits);
// b'_m = (4/3 - 2m) b_m
AsymSeries gen_bprime(const AsymSeries& b);

// Exponent series of the subdominant quantization: pi z D(z^2) equals
// pi (eps/alpha)^{3/4} A(-(2 eps)^{3/2}) with eps from the B series.
AsymSeries gen_d(const AsymSeries& a, const AsymSeries& b, int n_max, long bits);

// b and d from one shared composition.
std::pair<AsymSeries, AsymSeries> gen_b_and_d(const AsymSeries& a, int n_max, long bits);

// Leading subdominant eigenvalue correction coefficients h_0..h_{n_max},
// n_max <= 2 * min(b order, d order).
AsymSeries gen_h(const AsymSeries& b, const AsymSeries& d, int n_max, long bits);
AsymSeries gen_h(const AsymSeries& a, int n_max, long bits);

std::vector<Rational> gen_K(int m_max);
// c_n = 7/(7-6n) sum_m C(2n-7/3, 2m) K_m b_{n-m}
AsymSeries gen_c(const AsymSeries& b, const std::vector<Rational>& K, int n_max, long bits);
// q_n = (7/3)/(7/3-2n) sum_m B_{2(n-m)} C(4/3-2m, 2(n-m)) b_m
AsymSeries gen_q(const AsymSeries& b, int n_max, long bits);

// Coefficients f_0..f_4 of the asymptotic subdominant sum correction.
AsymSeries gen_f(const AsymSeries& h, long bits);
// sum_{n>=0} (-1)^n n^p e^{-pi n} (0^0 = 1), in closed form.
BigReal alternating_exp_moment(int p, long bits);

// Coefficients of u^0..u^order of sum_n a_n lambda^n u^n B(u)^{3/4-3n/2} - 1,
// lambda = (2 alpha)^{-3/2}, in exact arithmetic. All vanish when b reverts a.
std::vector<ExactCoeff> reversion_residual(const AsymSeries& a, const AsymSeries& b, int order);

}  // namespace qwkb::coeffs
