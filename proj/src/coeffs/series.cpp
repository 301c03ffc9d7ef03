#include "qwkb/coeffs/series.hpp"

#include <string>

#include "qwkb/errors.hpp"

namespace qwkb::coeffs {

std::string_view kind_name(SeriesKind kind) {
  switch (kind) {
    case SeriesKind::A: return "a";
    case SeriesKind::B: return "b";
    case SeriesKind::Bprime: return "bprime";
    case SeriesKind::D: return "d";
    case SeriesKind::H: return "h";
    case SeriesKind::C: return "c";
    case SeriesKind::Q: return "q";
    case SeriesKind::F: return "f";
  }
  return "?";
}

AsymSeries::AsymSeries(SeriesKind kind, std::vector<BigReal> values, std::vector<ExactCoeff> exact)
    : kind_(kind), values_(std::move(values)), exact_(std::move(exact)) {
  if (values_.empty()) throw CapacityError("empty coefficient series");
  if (!exact_.empty() && exact_.size() != values_.size())
    throw CapacityError("exact and numeric coefficient counts differ");
}

void AsymSeries::require(int m) const {
  if (m < 0 || m > max_order())
    throw CapacityError(std::string(kind_name(kind_)) + " series holds orders 0.." + std::to_string(max_order()) +
                        ", order " + std::to_string(m) + " requested");
}

const BigReal& AsymSeries::value(int m) const {
  require(m);
  return values_[static_cast<std::size_t>(m)];
}

const ExactCoeff& AsymSeries::exact(int m) const {
  require(m);
  if (exact_.empty()) throw CapacityError(std::string(kind_name(kind_)) + " series has no exact form");
  return exact_[static_cast<std::size_t>(m)];
}

BigReal AsymSeries::term(int m, const BigReal& y) const { return value(m) / pow(y, m); }

BigReal AsymSeries::eval(int M, const BigReal& y) const {
  require(M);
  const BigReal inv = BigReal(1, y.precision()) / y;
  BigReal sum = values_[0] * BigReal(1, y.precision());
  BigReal p(1, y.precision());
  for (int m = 1; m <= M; ++m) {
    p *= inv;
    sum += values_[static_cast<std::size_t>(m)] * p;
  }
  return sum;
}

AsymSeries AsymSeries::truncated(int n) const {
  require(n);
  std::vector<BigReal> v(values_.begin(), values_.begin() + n + 1);
  std::vector<ExactCoeff> e;
  if (!exact_.empty()) e.assign(exact_.begin(), exact_.begin() + n + 1);
  return AsymSeries(kind_, std::move(v), std::move(e));
}

}  // namespace qwkb::coeffs
