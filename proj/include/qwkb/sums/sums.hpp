#pragma once

#include <optional>
#include <string_view>

#include "qwkb/eigen/eigen.hpp"

namespace qwkb::sums {

using arith::BigReal;

enum class Method { SWKB, GEXP, CSWKB, HYP };

std::string_view method_name(Method m);
// "swkb", "gexp", "cswkb", "hyp"; ConfigError otherwise.
Method parse_method(std::string_view name);

enum class SdChoice { Exact, Asymptotic };

struct SumEstimate {
  int N = 0;
  Method method = Method::SWKB;
  int order = 0;
  BigReal value;
  std::optional<BigReal> sd_value;
  std::optional<BigReal> error;
  // Default order chosen below the particle count where the order rule is established.
  bool order_rule_unconfirmed = false;
};

// Asymptotics of E(N), the sum of the lowest N eigenvalues; Z = N + 1/2.
class SumApprox {
 public:
  // Particle count from which the default corrected order is established.
  static constexpr int kOrderRuleFrom = 8;

  explicit SumApprox(long bits = arith::kDefaultPrecisionBits);
  explicit SumApprox(std::shared_ptr<const coeffs::CoefficientSet> coefficients);

  const eigen::EigenApprox& eigen() const noexcept { return eigen_; }
  long bits() const noexcept { return eigen_.bits(); }

  // argmin over even m of |c_m / N^{2m}|.
  eigen::LeastAddition swkb_least_addition(int N) const;
  // Odd order just below the even least addition.
  int default_corrected_order(int N) const;

  // (3/7) alpha N^{7/3} C_M(N^2)
  SumEstimate e_swkb(int N, std::optional<int> M = std::nullopt) const;
  // alpha sum_m [(3/7) q_m Z^{7/3-2m} - (b_m/2) Z^{4/3-2m}]
  SumEstimate e_gexp(int N, int M) const;
  // (3/7) alpha sum_m q_m Z^{7/3-2m}, approximating E(N) + eps_N / 2.
  BigReal midway(int N, int M) const;
  // -sum_{j>=N} eps^SD_{L_j}(j + 1/2), each term at least addition.
  BigReal e_sd_exact(int N) const;
  // -eps^SD(Z) / (1 + e^{-pi}) sum_{n<=4} f_n / Z^n
  BigReal e_sd_asym(int N) const;
  BigReal e_sd(int N, SdChoice choice) const;
  // SWKB plus the subdominant sum correction.
  SumEstimate e_cswkb(int N, std::optional<int> M = std::nullopt, SdChoice sd = SdChoice::Asymptotic) const;
  // Average of SWKB at M and M + 2 plus the asymptotic subdominant correction.
  SumEstimate e_hyp(int N, std::optional<int> M = std::nullopt) const;
  SumEstimate estimate(Method method, int N, std::optional<int> M = std::nullopt) const;
  // E(n+1) - E(n) under one method; E(0) = 0.
  eigen::EigenEstimate eps_from_sums(Method method, int n, std::optional<int> M = std::nullopt) const;

  static SumEstimate with_error(SumEstimate e, const oracle::ReferenceSpectrum& reference);

 private:
  void require_count(int N, int min) const;
  BigReal Z_of(int N) const;

  eigen::EigenApprox eigen_;
  BigReal alpha_;
};

}  // namespace qwkb::sums
