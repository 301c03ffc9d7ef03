#pragma once

#include <memory>
#include <optional>
#include <string_view>

#include "qwkb/arith/big_real.hpp"
#include "qwkb/coeffs/registry.hpp"
#include "qwkb/eigen/truncation.hpp"
#include "qwkb/oracle/reference.hpp"

namespace qwkb::eigen {

// SumDifference tags eigenvalues recovered as differences of sum estimates.
enum class Method { WKB, BCWKB, LinCorr, CWKB, SumDifference };

std::string_view method_name(Method m);
// "wkb", "bcwkb", "lincorr", "cwkb"; ConfigError otherwise.
Method parse_method(std::string_view name);

struct EigenEstimate {
  int level = 0;
  Method method = Method::WKB;
  int order = 0;
  std::optional<int> sd_order;
  BigReal value;
  std::optional<BigReal> error;
  bool order_capped = false;
};

// sum_{m<=M} c_m / y^m
BigReal eval_poly(const AsymSeries& series, int M, const BigReal& y);

// Eigenvalue approximations at z = n + 1/2, all at one working precision.
class EigenApprox {
 public:
  explicit EigenApprox(long bits = arith::kDefaultPrecisionBits);
  explicit EigenApprox(std::shared_ptr<const coeffs::CoefficientSet> coefficients);

  long bits() const noexcept { return bits_; }
  const coeffs::CoefficientSet& coefficients() const noexcept { return *coeffs_; }
  BigReal z_of(int n) const;

  // Least-addition orders at level n: b at z^2, d at z^2, h at z.
  LeastAddition wkb_least_addition(int n) const;
  LeastAddition d_least_addition(int n) const;
  LeastAddition sd_least_addition(int n) const;
  // Default WKB order alongside a subdominant correction: L_WKB - 1.
  int default_wkb_order(int n) const;

  // alpha z^{4/3} B_M(z^2)
  BigReal wkb_value(const BigReal& z, int M) const;
  EigenEstimate eps_wkb(int n, int M) const;
  // ((-1)^n / pi) atan(exp(-pi z D_{M'}(z^2)))
  BigReal g_val(int n, int M_prime) const;
  // WKB at the shifted argument z + g.
  EigenEstimate eps_bcwkb(int n, std::optional<int> M = std::nullopt, std::optional<int> M_prime = std::nullopt) const;
  // g alpha z^{1/3} B'_M(z^2)
  BigReal lin_corr(int n, int M, int M_prime) const;
  // WKB plus lin_corr.
  EigenEstimate eps_lincorr(int n, std::optional<int> M = std::nullopt, std::optional<int> M_prime = std::nullopt) const;
  // sign (4 alpha / 3 pi) z^{1/3} e^{-pi z} H_M(z); sign is (-1)^n at z = n + 1/2.
  BigReal eps_sd(const BigReal& z, int M, int sign) const;
  // At z = n + 1/2, least-addition order when M is absent.
  BigReal eps_sd(int n, std::optional<int> M = std::nullopt) const;
  // WKB_M + eps^SD_{M'}
  EigenEstimate eps_cwkb(int n, std::optional<int> M = std::nullopt, std::optional<int> M_prime = std::nullopt) const;

  // Order picked by a strategy for the WKB series at level n.
  int wkb_order(int n, const TruncationStrategy& strategy) const;

  // Same method and orders, with error against the reference filled in.
  static EigenEstimate with_error(EigenEstimate e, const oracle::ReferenceSpectrum& reference);

 private:
  void require_level(int n) const;

  std::shared_ptr<const coeffs::CoefficientSet> coeffs_;
  long bits_;
  BigReal alpha_;
  BigReal pi_;
};

}  // namespace qwkb::eigen
