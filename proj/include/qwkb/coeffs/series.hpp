#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "qwkb/arith/big_real.hpp"
#include "qwkb/arith/exact_coeff.hpp"

namespace qwkb::coeffs {

using arith::BigReal;
using arith::ExactCoeff;
using arith::Rational;

enum class SeriesKind { A, B, Bprime, D, H, C, Q, F };

std::string_view kind_name(SeriesKind kind);

// Coefficients c_0..c_max of an asymptotic series sum_m c_m / y^m.
// Numeric values are always present; exact forms are kept when known.
class AsymSeries {
 public:
  AsymSeries(SeriesKind kind, std::vector<BigReal> values, std::vector<ExactCoeff> exact = {});

  SeriesKind kind() const noexcept { return kind_; }
  int max_order() const noexcept { return static_cast<int>(values_.size()) - 1; }
  long precision() const noexcept { return values_.front().precision(); }
  bool has_exact() const noexcept { return !exact_.empty(); }

  // Throws CapacityError beyond max_order().
  const BigReal& value(int m) const;
  const ExactCoeff& exact(int m) const;
  const std::vector<BigReal>& values() const noexcept { return values_; }
  const std::vector<ExactCoeff>& exact_values() const noexcept { return exact_; }

  // c_m / y^m
  BigReal term(int m, const BigReal& y) const;
  // sum_{m<=M} c_m / y^m
  BigReal eval(int M, const BigReal& y) const;

  // Leading coefficients 0..n as a new series.
  AsymSeries truncated(int n) const;

 private:
  void require(int m) const;

  SeriesKind kind_;
  std::vector<BigReal> values_;
  std::vector<ExactCoeff> exact_;
};

}  // namespace qwkb::coeffs
