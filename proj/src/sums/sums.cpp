#include "qwkb/sums/sums.hpp"

#include <cmath>
#include <string>

#include "qwkb/arith/special.hpp"
#include "qwkb/errors.hpp"

namespace qwkb::sums {

using arith::Rational;

std::string_view method_name(Method m) {
  switch (m) {
    case Method::SWKB: return "swkb";
    case Method::GEXP: return "gexp";
    case Method::CSWKB: return "cswkb";
    case Method::HYP: return "hyp";
  }
  return "?";
}

Method parse_method(std::string_view name) {
  if (name == "swkb") return Method::SWKB;
  if (name == "gexp") return Method::GEXP;
  if (name == "cswkb") return Method::CSWKB;
  if (name == "hyp") return Method::HYP;
  throw ConfigError("unknown sum method '" + std::string(name) + "'");
}

SumApprox::SumApprox(long bits) : SumApprox(coeffs::coefficient_set(bits)) {}

SumApprox::SumApprox(std::shared_ptr<const coeffs::CoefficientSet> coefficients)
    : eigen_(std::move(coefficients)), alpha_(arith::const_alpha(eigen_.bits())) {}

void SumApprox::require_count(int N, int min) const {
  if (N < min) throw RangeError("particle count must be at least " + std::to_string(min) + ", got " + std::to_string(N));
}

BigReal SumApprox::Z_of(int N) const { return BigReal(2 * N + 1, bits()) / 2L; }

eigen::LeastAddition SumApprox::swkb_least_addition(int N) const {
  require_count(N, 1);
  const BigReal n(N, bits());
  return eigen::even_least_addition(eigen_.coefficients().c, n * n);
}

int SumApprox::default_corrected_order(int N) const {
  const int L = swkb_least_addition(N).order;
  return L > 0 ? L - 1 : 0;
}

SumEstimate SumApprox::e_swkb(int N, std::optional<int> M) const {
  require_count(N, 1);
  const int m = M.value_or(swkb_least_addition(N).order);
  const BigReal n(N, bits());
  BigReal v = BigReal(3, bits()) / 7L * alpha_ * pow(n, Rational(7, 3)) * eigen_.coefficients().c.eval(m, n * n);
  return SumEstimate{N, Method::SWKB, m, std::move(v), std::nullopt, std::nullopt, false};
}

BigReal SumApprox::midway(int N, int M) const {
  require_count(N, 0);
  const BigReal Z = Z_of(N);
  return BigReal(3, bits()) / 7L * alpha_ * pow(Z, Rational(7, 3)) * eigen_.coefficients().q.eval(M, Z * Z);
}

SumEstimate SumApprox::e_gexp(int N, int M) const {
  require_count(N, 0);
  const BigReal Z = Z_of(N);
  BigReal v = midway(N, M) - alpha_ / 2L * pow(Z, Rational(4, 3)) * eigen_.coefficients().b.eval(M, Z * Z);
  return SumEstimate{N, Method::GEXP, M, std::move(v), std::nullopt, std::nullopt, false};
}

BigReal SumApprox::e_sd_exact(int N) const {
  require_count(N, 0);
  // Stop once a term is below 10^-(digits + 5) of the running sum.
  const long digits = static_cast<long>(static_cast<double>(bits()) * 0.30103);
  const BigReal floor_ratio = pow(BigReal(10, bits()), -(digits + 5));
  BigReal sum(bits());
  for (int j = N;; ++j) {
    const BigReal t = eigen_.eps_sd(j);
    sum -= t;
    if (abs(t) < abs(sum) * floor_ratio) break;
    if (j > N + 4 * digits) throw ConvergenceError("subdominant sum tail did not converge", 0);
  }
  return sum;
}

BigReal SumApprox::e_sd_asym(int N) const {
  require_count(N, 0);
  const BigReal Z = Z_of(N);
  const auto& f = eigen_.coefficients().f;
  const BigReal sd = eigen_.eps_sd(N);
  const BigReal scale = BigReal(1, bits()) + exp(-arith::const_pi(bits()));
  return -(sd / scale * f.eval(f.max_order(), Z));
}

BigReal SumApprox::e_sd(int N, SdChoice choice) const {
  return choice == SdChoice::Exact ? e_sd_exact(N) : e_sd_asym(N);
}

SumEstimate SumApprox::e_cswkb(int N, std::optional<int> M, SdChoice sd) const {
  require_count(N, 1);
  const int m = M.value_or(default_corrected_order(N));
  SumEstimate e = e_swkb(N, m);
  e.method = Method::CSWKB;
  e.sd_value = e_sd(N, sd);
  e.value += *e.sd_value;
  e.order_rule_unconfirmed = !M && N < kOrderRuleFrom;
  return e;
}

SumEstimate SumApprox::e_hyp(int N, std::optional<int> M) const {
  require_count(N, 1);
  const int m = M.value_or(default_corrected_order(N));
  const BigReal sd = e_sd_asym(N);
  BigReal v = (e_swkb(N, m).value + e_swkb(N, m + 2).value) / 2L + sd;
  return SumEstimate{N, Method::HYP, m, std::move(v), sd, std::nullopt, !M && N < kOrderRuleFrom};
}

SumEstimate SumApprox::estimate(Method method, int N, std::optional<int> M) const {
  switch (method) {
    case Method::SWKB: return e_swkb(N, M);
    case Method::GEXP: return e_gexp(N, M.value_or(swkb_least_addition(std::max(N, 1)).order));
    case Method::CSWKB: return e_cswkb(N, M);
    case Method::HYP: return e_hyp(N, M);
  }
  return e_swkb(N, M);
}

eigen::EigenEstimate SumApprox::eps_from_sums(Method method, int n, std::optional<int> M) const {
  require_count(n, 0);
  const SumEstimate upper = estimate(method, n + 1, M);
  eigen::EigenEstimate e;
  e.level = n;
  e.method = eigen::Method::SumDifference;
  e.order = upper.order;
  e.value = n == 0 ? upper.value : upper.value - estimate(method, n, M).value;
  return e;
}

SumEstimate SumApprox::with_error(SumEstimate e, const oracle::ReferenceSpectrum& reference) {
  e.error = oracle::error_of(e.value, e.N, reference, oracle::ErrorKind::Sum);
  return e;
}

}  // namespace qwkb::sums
