#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string_view>

#include "qwkb/arith/big_real.hpp"
#include "qwkb/coeffs/series.hpp"
#include "qwkb/oracle/reference.hpp"

namespace qwkb::eigen {

using arith::BigReal;
using coeffs::AsymSeries;

enum class Strategy { Empirical, LeastAddition, Asymptotic };

std::string_view strategy_name(Strategy s);
// "empirical", "least" or "asym"; ConfigError otherwise.
Strategy parse_strategy(std::string_view name);

struct TruncationStrategy {
  Strategy variant = Strategy::LeastAddition;
  std::shared_ptr<const oracle::ReferenceSpectrum> reference;  // required for Empirical

  // ConfigError for Empirical without a reference.
  void validate() const;
};

struct LeastAddition {
  int order = 0;
  // The smallest term sits at the scan cap, so terms may still be shrinking.
  bool capped = false;
};

// argmin_m |c_m / y^m| over 0 <= m <= cap (cap < 0: the series capacity).
// Ties go to the smaller m.
LeastAddition least_addition(const AsymSeries& series, const BigReal& y, int cap = -1);
// Same scan restricted to even m.
LeastAddition even_least_addition(const AsymSeries& series, const BigReal& y, int cap = -1);

// floor(1 + (pi / sqrt 2)(n + 1/2))
int asymptotic_order(int n);

// argmin_M |error(M)| over lo <= M <= hi, ties to the smaller M.
int empirical_order(const std::function<BigReal(int)>& error, int lo, int hi);

// Order for the series at argument y. Asymptotic needs a B series and the
// level; Empirical needs a reference, the level and `value_at` giving the
// approximation at each order.
int truncation_order(const AsymSeries& series, const BigReal& y, const TruncationStrategy& strategy,
                     std::optional<int> level = std::nullopt,
                     const std::function<BigReal(int)>& value_at = nullptr);

}  // namespace qwkb::eigen
