#include "qwkb/coeffs/families.hpp"

#include <string>

#include "qwkb/arith/special.hpp"
#include "qwkb/coeffs/series_ops.hpp"
#include "qwkb/errors.hpp"
#include "sigma_poly.hpp"

namespace qwkb::coeffs {

namespace {

using arith::bernoulli;
using arith::binom_general;
using arith::const_gamma;
using arith::const_pi;
using detail::SigmaPoly;

void require_order(const AsymSeries& s, int n, const char* what) {
  if (s.max_order() < n)
    throw CapacityError(std::string(what) + " needs the " + std::string(kind_name(s.kind())) + " series to order " +
                        std::to_string(n) + ", have " + std::to_string(s.max_order()));
}

void require_exact(const AsymSeries& s, const char* what) {
  if (!s.has_exact()) throw CapacityError(std::string(what) + " needs exact coefficients");
}

void require_cap(int n_max) {
  if (n_max < 0) throw RangeError("negative order");
  if (n_max > kCoeffCap) throw CapacityError("coefficient generation is capped at order " + std::to_string(kCoeffCap));
}

std::vector<BigReal> evaluate(const std::vector<ExactCoeff>& exact, long bits) {
  std::vector<BigReal> v;
  v.reserve(exact.size());
  for (const auto& c : exact) v.push_back(c.eval(bits));
  return v;
}

BigReal factorial(int n, long bits) {
  BigReal r(bits);
  mpfr_fac_ui(r.get(), static_cast<unsigned long>(n), MPFR_RNDN);
  return r;
}

// a_n lambda^n in sigma form, lambda = gamma^4 / (18 pi^3).
std::vector<SigmaPoly> scaled_action(const AsymSeries& a, int n_max) {
  const ExactCoeff lambda = ExactCoeff::monomial(Rational(1, 18), -3, 4);
  std::vector<SigmaPoly> A;
  ExactCoeff lp(1);
  for (int n = 0; n <= n_max; ++n) {
    A.push_back(SigmaPoly::from_exact(a.exact(n) * lp, n));
    lp *= lambda;
  }
  return A;
}

// Coefficients of B(u)^{3/4 - 3n/2} in sigma form, built order by order.
// When `solve` is set, b_k is fixed at step k so that
// sum_n A_n u^n B^{3/4-3n/2} = 1 holds through u^k.
struct Composition {
  std::vector<SigmaPoly> A;
  std::vector<SigmaPoly> b;
  std::vector<std::vector<SigmaPoly>> P;

  Composition(std::vector<SigmaPoly> action, std::vector<SigmaPoly> b_in, int K, bool solve)
      : A(std::move(action)), b(std::move(b_in)) {
    if (solve) b.assign(static_cast<std::size_t>(K) + 1, SigmaPoly());
    b[0] = SigmaPoly(Rational(1));
    P.resize(static_cast<std::size_t>(K) + 1);
    for (int k = 0; k <= K; ++k) {
      P[k].push_back(SigmaPoly(Rational(1)));
      for (int n = 0; n < k; ++n) extend(n, k - n);
      if (solve && k > 0) {
        b[k] = SigmaPoly();
        extend(0, k);
        const SigmaPoly residual = coefficient(k, false);
        b[k] = residual * Rational(-4, 3);
        P[0][k] = P[0][k] + b[k] * Rational(3, 4);
      } else if (k > 0) {
        extend(0, k);
      }
    }
  }

  void extend(int n, int j) {
    auto& c = P[static_cast<std::size_t>(n)];
    if (static_cast<int>(c.size()) > j) return;
    const Rational r1 = Rational(3, 4) - Rational(3 * n, 2) + Rational(1);
    SigmaPoly acc;
    for (int i = 1; i <= j; ++i) {
      const Rational w = r1 * Rational(i) - Rational(j);
      if (!w.is_zero() && !b[i].is_zero()) acc = acc + b[i] * c[j - i] * w;
    }
    c.push_back(acc * (Rational(1) / Rational(j)));
  }

  // sum_n (+-1)^n A_n [u^{k-n}] B^{3/4-3n/2}
  SigmaPoly coefficient(int k, bool alternate) const {
    SigmaPoly s;
    for (int n = 0; n <= k && n < static_cast<int>(A.size()); ++n) {
      const SigmaPoly t = A[n] * P[n][k - n];
      s = (alternate && n % 2 == 1) ? s - t : s + t;
    }
    return s;
  }
};

std::vector<SigmaPoly> sigma_form(const AsymSeries& s, int n_max) {
  std::vector<SigmaPoly> out;
  for (int k = 0; k <= n_max; ++k) out.push_back(SigmaPoly::from_exact(s.exact(k), k));
  return out;
}

// Evaluates series values at higher precision when exact forms allow it.
std::vector<BigReal> values_at(const AsymSeries& s, int n, long bits) {
  std::vector<BigReal> v;
  for (int m = 0; m <= n; ++m) v.push_back(s.has_exact() ? s.exact(m).eval(bits) : s.value(m).with_precision(bits));
  return v;
}

}  // namespace

AsymSeries gen_a(int n_max, long bits) {
  arith::require_precision(bits);
  auto exact = wkb_action_coefficients(n_max);
  auto values = evaluate(exact, bits);
  return AsymSeries(SeriesKind::A, std::move(values), std::move(exact));
}

BigReal asym_a(int n, long bits) {
  if (n < 1) throw RangeError("asymptotic a_n needs n >= 1");
  const long w = bits + 32;
  const BigReal pi = const_pi(w);
  BigReal r = BigReal(2, w) / pi * pow(BigReal(9, w) * pi / pow(const_gamma(w), 4), n) * factorial(2 * n - 2, w);
  if ((n / 2) % 2 == 0) r = -r;
  return r.with_precision(bits);
}

AsymSeries gen_b_from_a(const AsymSeries& a, int n_max, long bits) {
  require_cap(n_max);
  require_exact(a, "reversion");
  require_order(a, n_max, "reversion");
  const Composition comp(scaled_action(a, n_max), {}, n_max, true);
  std::vector<ExactCoeff> exact;
  for (int k = 0; k <= n_max; ++k) exact.push_back(comp.b[k].to_exact(k));
  auto values = evaluate(exact, bits);
  return AsymSeries(SeriesKind::B, std::move(values), std::move(exact));
}

BigReal asym_b(int n, long bits) {
  if (n < 1) throw RangeError("asymptotic b_n needs n >= 1");
  const long w = bits + 32;
  const BigReal pi = const_pi(w);
  BigReal r = BigReal(8, w) * factorial(2 * n - 2, w) / (BigReal(3, w) * pi * pow(BigReal(2, w) * pi * pi, n));
  if ((n / 2) % 2 == 1) r = -r;
  return r.with_precision(bits);
}

AsymSeries gen_bprime(const AsymSeries& b) {
  std::vector<BigReal> v;
  std::vector<ExactCoeff> e;
  for (int m = 0; m <= b.max_order(); ++m) {
    const Rational f = Rational(4, 3) - Rational(2 * m);
    v.push_back(b.value(m) * f);
    if (b.has_exact()) e.push_back(b.exact(m) * f);
  }
  return AsymSeries(SeriesKind::Bprime, std::move(v), std::move(e));
}

AsymSeries gen_d(const AsymSeries& a, const AsymSeries& b, int n_max, long bits) {
  require_cap(n_max);
  require_exact(a, "d generation");
  require_exact(b, "d generation");
  require_order(a, n_max, "d generation");
  require_order(b, n_max, "d generation");
  const Composition comp(scaled_action(a, n_max), sigma_form(b, n_max), n_max, false);
  std::vector<ExactCoeff> exact;
  for (int k = 0; k <= n_max; ++k) exact.push_back(comp.coefficient(k, true).to_exact(k));
  auto values = evaluate(exact, bits);
  return AsymSeries(SeriesKind::D, std::move(values), std::move(exact));
}

std::pair<AsymSeries, AsymSeries> gen_b_and_d(const AsymSeries& a, int n_max, long bits) {
  require_cap(n_max);
  require_exact(a, "reversion");
  require_order(a, n_max, "reversion");
  const Composition comp(scaled_action(a, n_max), {}, n_max, true);
  std::vector<ExactCoeff> be, de;
  for (int k = 0; k <= n_max; ++k) {
    be.push_back(comp.b[k].to_exact(k));
    de.push_back(comp.coefficient(k, true).to_exact(k));
  }
  auto bv = evaluate(be, bits);
  auto dv = evaluate(de, bits);
  return {AsymSeries(SeriesKind::B, std::move(bv), std::move(be)), AsymSeries(SeriesKind::D, std::move(dv), std::move(de))};
}

std::vector<ExactCoeff> reversion_residual(const AsymSeries& a, const AsymSeries& b, int order) {
  require_exact(a, "reversion residual");
  require_exact(b, "reversion residual");
  require_order(a, order, "reversion residual");
  require_order(b, order, "reversion residual");
  const Composition comp(scaled_action(a, order), sigma_form(b, order), order, false);
  std::vector<ExactCoeff> out;
  for (int k = 0; k <= order; ++k) {
    SigmaPoly c = comp.coefficient(k, false);
    if (k == 0) c = c - SigmaPoly(Rational(1));
    out.push_back(c.to_exact(k));
  }
  return out;
}

AsymSeries gen_h(const AsymSeries& b, const AsymSeries& d, int n_max, long bits) {
  arith::require_precision(bits);
  if (n_max < 0) throw RangeError("negative order");
  require_order(b, n_max / 2, "h generation");
  require_order(d, (n_max + 1) / 2, "h generation");
  // exp() of the d series cancels heavily at high order.
  const long w = bits + 4L * n_max + 64;
  const BigReal zero(w);
  const BigReal one(1, w);
  const BigReal pi = const_pi(w);
  const auto bv = values_at(b, n_max / 2, w);
  const auto dv = values_at(d, (n_max + 1) / 2, w);
  std::vector<BigReal> s(static_cast<std::size_t>(n_max) + 1, zero);
  for (int n = 1; 2 * n - 1 <= n_max; ++n) s[2 * n - 1] = -(pi * dv[n]);
  const auto e = ops::exp_series(s, n_max, one, zero);
  std::vector<BigReal> bp(static_cast<std::size_t>(n_max) + 1, zero);
  for (int m = 0; 2 * m <= n_max; ++m) bp[2 * m] = bv[m] * (Rational(3, 4) * (Rational(4, 3) - Rational(2 * m)));
  auto h = ops::mul(bp, e, n_max, zero);
  for (auto& v : h) v = v.with_precision(bits);
  return AsymSeries(SeriesKind::H, std::move(h));
}

AsymSeries gen_h(const AsymSeries& a, int n_max, long bits) {
  const int need = (n_max + 1) / 2;
  const AsymSeries b = gen_b_from_a(a, need, bits);
  const AsymSeries d = gen_d(a, b, need, bits);
  return gen_h(b, d, n_max, bits);
}

std::vector<Rational> gen_K(int m_max) {
  if (m_max < 0) throw RangeError("negative order");
  std::vector<Rational> K{Rational(1)};
  for (int m = 1; m <= m_max; ++m) {
    Rational s = (Rational(1) - Rational(m) / arith::pow(Rational(4), m - 1)) / Rational(2);
    for (int r = 1; r <= m; ++r)
      s += (Rational(1) / arith::pow(Rational(4), r) - Rational(1, 1 + 2 * r)) *
           binom_general(Rational(2 * m), 2 * r) * bernoulli(2 * (m - r));
    K.push_back(s);
  }
  return K;
}

AsymSeries gen_c(const AsymSeries& b, const std::vector<Rational>& K, int n_max, long bits) {
  require_cap(n_max);
  require_order(b, n_max, "c generation");
  if (static_cast<int>(K.size()) <= n_max) throw CapacityError("c generation needs K to order " + std::to_string(n_max));
  std::vector<BigReal> v;
  std::vector<ExactCoeff> e;
  for (int n = 0; n <= n_max; ++n) {
    const Rational pre = Rational(7) / Rational(7 - 6 * n);
    ExactCoeff ex;
    BigReal num(bits);
    for (int m = 0; m <= n; ++m) {
      const Rational w = pre * binom_general(Rational(2 * n) - Rational(7, 3), 2 * m) * K[m];
      if (b.has_exact()) ex += b.exact(n - m) * w;
      else num += b.value(n - m) * w;
    }
    if (b.has_exact()) {
      v.push_back(ex.eval(bits));
      e.push_back(std::move(ex));
    } else {
      v.push_back(num);
    }
  }
  return AsymSeries(SeriesKind::C, std::move(v), std::move(e));
}

AsymSeries gen_q(const AsymSeries& b, int n_max, long bits) {
  require_cap(n_max);
  require_order(b, n_max, "q generation");
  std::vector<BigReal> v;
  std::vector<ExactCoeff> e;
  for (int n = 0; n <= n_max; ++n) {
    const Rational pre = Rational(7, 3) / (Rational(7, 3) - Rational(2 * n));
    ExactCoeff ex;
    BigReal num(bits);
    for (int m = 0; m <= n; ++m) {
      const Rational w = pre * bernoulli(2 * (n - m)) * binom_general(Rational(4, 3) - Rational(2 * m), 2 * (n - m));
      if (b.has_exact()) ex += b.exact(m) * w;
      else num += b.value(m) * w;
    }
    if (b.has_exact()) {
      v.push_back(ex.eval(bits));
      e.push_back(std::move(ex));
    } else {
      v.push_back(num);
    }
  }
  return AsymSeries(SeriesKind::Q, std::move(v), std::move(e));
}

BigReal alternating_exp_moment(int p, long bits) {
  if (p < 0) throw RangeError("negative moment");
  const long w = bits + 32;
  // t = -e^{-pi}; sum_{n>=1} n^p t^n = N_p(t) / (1-t)^{p+1} with
  // N_0 = t and N_{p+1} = t ((1-t) N_p' + (p+1) N_p).
  std::vector<mpz_class> N{0, 1};
  for (int k = 0; k < p; ++k) {
    std::vector<mpz_class> next(N.size() + 1, 0);
    for (std::size_t i = 0; i < N.size(); ++i) {
      // t * (p+1) N_i t^i
      next[i + 1] += N[i] * (k + 1);
      if (i >= 1) {
        // t * (1-t) * i N_i t^{i-1}
        next[i] += N[i] * static_cast<long>(i);
        next[i + 1] -= N[i] * static_cast<long>(i);
      }
    }
    N = std::move(next);
  }
  const BigReal t = -exp(-const_pi(w));
  BigReal num(w);
  BigReal tp(1, w);
  for (const auto& c : N) {
    num += BigReal(c, w) * tp;
    tp *= t;
  }
  BigReal r = num / pow(BigReal(1, w) - t, p + 1);
  if (p == 0) r += BigReal(1, w);
  return r.with_precision(bits);
}

AsymSeries gen_f(const AsymSeries& h, long bits) {
  constexpr int K = kFOrder;
  require_order(h, K, "f generation");
  const long w = bits + 64;
  const BigReal zero(w);
  using Grid = std::vector<std::vector<BigReal>>;  // [power of w][power of n]
  const auto grid = [&] { return Grid(K + 1, std::vector<BigReal>(K + 1, zero)); };
  const auto binomial_grid = [&](const Rational& s) {
    Grid g = grid();
    for (int k = 0; k <= K; ++k) g[k][k] = BigReal(binom_general(s, k), w);
    return g;
  };
  const auto product = [&](const Grid& a, const Grid& b) {
    Grid out = grid();
    for (int k1 = 0; k1 <= K; ++k1)
      for (int p1 = 0; p1 <= K; ++p1) {
        if (a[k1][p1].is_zero()) continue;
        for (int k2 = 0; k1 + k2 <= K; ++k2)
          for (int p2 = 0; p1 + p2 <= K; ++p2) out[k1 + k2][p1 + p2] += a[k1][p1] * b[k2][p2];
      }
    return out;
  };
  std::vector<BigReal> hv;
  for (int i = 0; i <= K; ++i) hv.push_back(h.value(i).with_precision(w));
  // sum_i h_i w^i (1 + n w)^{-i}
  Grid num = grid();
  for (int i = 0; i <= K; ++i) {
    const Grid t = binomial_grid(Rational(-i));
    for (int k = 0; k + i <= K; ++k)
      for (int p = 0; p <= K; ++p) num[k + i][p] += hv[i] * t[k][p];
  }
  num = product(num, binomial_grid(Rational(1, 3)));
  const auto inv = ops::inverse_unit(hv, K, BigReal(1, w), zero);
  Grid den = grid();
  for (int k = 0; k <= K; ++k) den[k][0] = inv[k];
  const Grid P = product(num, den);
  std::vector<BigReal> moments;
  for (int p = 0; p <= K; ++p) moments.push_back(alternating_exp_moment(p, w));
  const BigReal scale = BigReal(1, w) + exp(-const_pi(w));
  std::vector<BigReal> f;
  for (int k = 0; k <= K; ++k) {
    BigReal s(w);
    for (int p = 0; p <= K; ++p) s += P[k][p] * moments[p];
    f.push_back((s * scale).with_precision(bits));
  }
  return AsymSeries(SeriesKind::F, std::move(f));
}

}  // namespace qwkb::coeffs
