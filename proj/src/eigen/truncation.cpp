#include "qwkb/eigen/truncation.hpp"

#include <cmath>
#include <string>

#include "qwkb/arith/special.hpp"
#include "qwkb/errors.hpp"

namespace qwkb::eigen {

namespace {

LeastAddition scan(const AsymSeries& series, const BigReal& y, int cap, int step) {
  if (cap < 0 || cap > series.max_order()) cap = series.max_order();
  LeastAddition best;
  BigReal best_mag = abs(series.value(0));
  const BigReal inv = BigReal(1, y.precision()) / y;
  BigReal p(1, y.precision());
  for (int m = 1; m <= cap; ++m) {
    p *= inv;
    if (m % step != 0) continue;
    const BigReal mag = abs(series.value(m) * p);
    if (mag < best_mag) {
      best_mag = mag;
      best.order = m;
    }
  }
  int last = cap - cap % step;
  best.capped = best.order == last && last > 0;
  return best;
}

}  // namespace

std::string_view strategy_name(Strategy s) {
  switch (s) {
    case Strategy::Empirical: return "empirical";
    case Strategy::LeastAddition: return "least";
    case Strategy::Asymptotic: return "asym";
  }
  return "?";
}

Strategy parse_strategy(std::string_view name) {
  if (name == "empirical") return Strategy::Empirical;
  if (name == "least") return Strategy::LeastAddition;
  if (name == "asym") return Strategy::Asymptotic;
  throw ConfigError("unknown truncation strategy '" + std::string(name) + "'");
}

void TruncationStrategy::validate() const {
  if (variant == Strategy::Empirical && !reference)
    throw ConfigError("empirical truncation needs a reference spectrum");
}

LeastAddition least_addition(const AsymSeries& series, const BigReal& y, int cap) { return scan(series, y, cap, 1); }

LeastAddition even_least_addition(const AsymSeries& series, const BigReal& y, int cap) {
  return scan(series, y, cap, 2);
}

int asymptotic_order(int n) {
  if (n < 0) throw RangeError("negative level");
  const long bits = 128;
  BigReal z = BigReal(2 * n + 1, bits) / 2L;
  BigReal v = BigReal(1, bits) + arith::const_pi(bits) / sqrt(BigReal(2, bits)) * z;
  return static_cast<int>(floor(v).to_double());
}

int empirical_order(const std::function<BigReal(int)>& error, int lo, int hi) {
  if (lo > hi) throw RangeError("empty order range");
  int best = lo;
  BigReal best_err = abs(error(lo));
  for (int M = lo + 1; M <= hi; ++M) {
    BigReal e = abs(error(M));
    if (e < best_err) {
      best_err = e;
      best = M;
    }
  }
  return best;
}

int truncation_order(const AsymSeries& series, const BigReal& y, const TruncationStrategy& strategy,
                     std::optional<int> level, const std::function<BigReal(int)>& value_at) {
  strategy.validate();
  switch (strategy.variant) {
    case Strategy::LeastAddition: return least_addition(series, y).order;
    case Strategy::Asymptotic:
      if (series.kind() != coeffs::SeriesKind::B)
        throw UnsupportedStrategyError("asymptotic truncation is defined for the b series only");
      if (!level) throw ConfigError("asymptotic truncation needs the level");
      return asymptotic_order(*level);
    case Strategy::Empirical: {
      if (!level || !value_at) throw ConfigError("empirical truncation needs the level and an evaluator");
      const BigReal& ref = strategy.reference->eigenvalue(*level);
      return empirical_order([&](int M) { return value_at(M) - ref; }, 0, series.max_order());
    }
  }
  return 0;
}

}  // namespace qwkb::eigen
