#pragma once

#include <memory>
#include <vector>

#include "qwkb/arith/rational.hpp"
#include "qwkb/coeffs/series.hpp"

namespace qwkb::coeffs {

// Every coefficient family at one working precision, generated to full
// capacity: a, b, b', d, c, q to kCoeffCap, h to 2 kCoeffCap, f to kFOrder.
struct CoefficientSet {
  long bits;
  AsymSeries a, b, bprime, d, h, c, q, f;
  std::vector<arith::Rational> K;

  const AsymSeries& get(SeriesKind kind) const;
};

// Generated once per precision; later calls share the result. Safe to call
// from several threads.
std::shared_ptr<const CoefficientSet> coefficient_set(long bits);

}  // namespace qwkb::coeffs
