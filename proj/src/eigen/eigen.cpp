#include "qwkb/eigen/eigen.hpp"

#include <string>

#include "qwkb/arith/special.hpp"
#include "qwkb/errors.hpp"

namespace qwkb::eigen {

std::string_view method_name(Method m) {
  switch (m) {
    case Method::WKB: return "wkb";
    case Method::BCWKB: return "bcwkb";
    case Method::LinCorr: return "lincorr";
    case Method::CWKB: return "cwkb";
    case Method::SumDifference: return "sumdiff";
  }
  return "?";
}

Method parse_method(std::string_view name) {
  if (name == "wkb") return Method::WKB;
  if (name == "bcwkb") return Method::BCWKB;
  if (name == "lincorr") return Method::LinCorr;
  if (name == "cwkb") return Method::CWKB;
  throw ConfigError("unknown eigenvalue method '" + std::string(name) + "'");
}

BigReal eval_poly(const AsymSeries& series, int M, const BigReal& y) { return series.eval(M, y); }

EigenApprox::EigenApprox(long bits) : EigenApprox(coeffs::coefficient_set(bits)) {}

EigenApprox::EigenApprox(std::shared_ptr<const coeffs::CoefficientSet> coefficients)
    : coeffs_(std::move(coefficients)),
      bits_(coeffs_->bits),
      alpha_(arith::const_alpha(coeffs_->bits)),
      pi_(arith::const_pi(coeffs_->bits)) {}

void EigenApprox::require_level(int n) const {
  if (n < 0) throw RangeError("level must be non-negative, got " + std::to_string(n));
}

BigReal EigenApprox::z_of(int n) const {
  require_level(n);
  return BigReal(2 * n + 1, bits_) / 2L;
}

LeastAddition EigenApprox::wkb_least_addition(int n) const {
  const BigReal z = z_of(n);
  return least_addition(coeffs_->b, z * z);
}

LeastAddition EigenApprox::d_least_addition(int n) const {
  const BigReal z = z_of(n);
  return least_addition(coeffs_->d, z * z);
}

LeastAddition EigenApprox::sd_least_addition(int n) const { return least_addition(coeffs_->h, z_of(n)); }

int EigenApprox::default_wkb_order(int n) const {
  const int L = wkb_least_addition(n).order;
  return L > 0 ? L - 1 : 0;
}

BigReal EigenApprox::wkb_value(const BigReal& z, int M) const {
  return alpha_ * pow(z, arith::Rational(4, 3)) * coeffs_->b.eval(M, z * z);
}

EigenEstimate EigenApprox::eps_wkb(int n, int M) const {
  const BigReal z = z_of(n);
  return EigenEstimate{n, Method::WKB, M, std::nullopt, wkb_value(z, M), std::nullopt, false};
}

BigReal EigenApprox::g_val(int n, int M_prime) const {
  const BigReal z = z_of(n);
  BigReal g = atan(exp(-(pi_ * z * coeffs_->d.eval(M_prime, z * z)))) / pi_;
  return n % 2 == 0 ? g : -g;
}

EigenEstimate EigenApprox::eps_bcwkb(int n, std::optional<int> M, std::optional<int> M_prime) const {
  const int m = M.value_or(default_wkb_order(n));
  const int mp = M_prime.value_or(d_least_addition(n).order);
  const BigReal z = z_of(n) + g_val(n, mp);
  return EigenEstimate{n, Method::BCWKB, m, mp, wkb_value(z, m), std::nullopt, false};
}

BigReal EigenApprox::lin_corr(int n, int M, int M_prime) const {
  const BigReal z = z_of(n);
  return g_val(n, M_prime) * alpha_ * cbrt(z) * coeffs_->bprime.eval(M, z * z);
}

EigenEstimate EigenApprox::eps_lincorr(int n, std::optional<int> M, std::optional<int> M_prime) const {
  const int m = M.value_or(default_wkb_order(n));
  const int mp = M_prime.value_or(d_least_addition(n).order);
  const BigReal z = z_of(n);
  return EigenEstimate{n, Method::LinCorr, m, mp, wkb_value(z, m) + lin_corr(n, m, mp), std::nullopt, false};
}

BigReal EigenApprox::eps_sd(const BigReal& z, int M, int sign) const {
  if (!(z.sign() > 0)) throw RangeError("subdominant correction needs z > 0");
  BigReal v = BigReal(4, bits_) * alpha_ / (BigReal(3, bits_) * pi_) * cbrt(z) * exp(-(pi_ * z)) *
              coeffs_->h.eval(M, z);
  return sign < 0 ? -v : v;
}

BigReal EigenApprox::eps_sd(int n, std::optional<int> M) const {
  const int m = M.value_or(sd_least_addition(n).order);
  return eps_sd(z_of(n), m, n % 2 == 0 ? 1 : -1);
}

EigenEstimate EigenApprox::eps_cwkb(int n, std::optional<int> M, std::optional<int> M_prime) const {
  const LeastAddition sd = sd_least_addition(n);
  const int m = M.value_or(default_wkb_order(n));
  const int mp = M_prime.value_or(sd.order);
  const bool capped = !M_prime && sd.capped;
  return EigenEstimate{n, Method::CWKB, m, mp, wkb_value(z_of(n), m) + eps_sd(n, mp), std::nullopt, capped};
}

int EigenApprox::wkb_order(int n, const TruncationStrategy& strategy) const {
  const BigReal z = z_of(n);
  return truncation_order(coeffs_->b, z * z, strategy, n, [&](int M) { return wkb_value(z, M); });
}

EigenEstimate EigenApprox::with_error(EigenEstimate e, const oracle::ReferenceSpectrum& reference) {
  e.error = oracle::error_of(e.value, e.level, reference, oracle::ErrorKind::Eigenvalue);
  return e;
}

}  // namespace qwkb::eigen
