#pragma once

#include <mpfr.h>

#include <compare>
#include <string>
#include <string_view>

#include "qwkb/arith/rational.hpp"

namespace qwkb::arith {

inline constexpr long kMinPrecisionBits = 64;
inline constexpr long kDefaultPrecisionBits = 256;

// Throws ConfigError when bits is below kMinPrecisionBits.
void require_precision(long bits);

// Multiprecision binary float. Binary operations round to nearest at the
// larger of the two operand precisions.
class BigReal {
 public:
  explicit BigReal(long precision_bits = kDefaultPrecisionBits);
  BigReal(long value, long precision_bits);
  BigReal(const Rational& value, long precision_bits);
  BigReal(const mpz_class& value, long precision_bits);
  // Decimal text such as "-1.25e-03"; throws ConfigError on malformed input.
  BigReal(std::string_view decimal, long precision_bits);
  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  long precision() const noexcept { return static_cast<long>(mpfr_get_prec(v_)); }
  // Same value rounded to a new precision.
  BigReal with_precision(long bits) const;

  mpfr_srcptr get() const noexcept { return v_; }
  mpfr_ptr get() noexcept { return v_; }

  int sign() const noexcept { return mpfr_sgn(v_); }
  bool is_zero() const noexcept { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const noexcept { return mpfr_number_p(v_) != 0; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long exponent10() const;  // floor(log10|x|), 0 for zero

  // Scientific notation with `digits` significant digits, explicit exponent
  // sign and at least two exponent digits: "-1.2345e-03".
  std::string to_scientific(int digits) const;
  // Shortest decimal that round-trips at the current precision.
  std::string to_string() const;

  BigReal& operator+=(const BigReal& o);
  BigReal& operator-=(const BigReal& o);
  BigReal& operator*=(const BigReal& o);
  BigReal& operator/=(const BigReal& o);
  BigReal& operator*=(long k);
  BigReal& operator/=(long k);
  BigReal& operator*=(const Rational& q);

  friend BigReal operator+(const BigReal& a, const BigReal& b);
  friend BigReal operator-(const BigReal& a, const BigReal& b);
  friend BigReal operator*(const BigReal& a, const BigReal& b);
  friend BigReal operator/(const BigReal& a, const BigReal& b);
  friend BigReal operator*(BigReal a, long k) { return a *= k; }
  friend BigReal operator*(long k, BigReal a) { return a *= k; }
  friend BigReal operator/(BigReal a, long k) { return a /= k; }
  friend BigReal operator*(BigReal a, const Rational& q) { return a *= q; }
  friend BigReal operator*(const Rational& q, BigReal a) { return a *= q; }
  friend BigReal operator-(const BigReal& a);

  friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const BigReal& a, const BigReal& b);

 private:
  mpfr_t v_;
};

BigReal abs(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal cbrt(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal log(const BigReal& x);
BigReal atan(const BigReal& x);
BigReal floor(const BigReal& x);
BigReal pow(const BigReal& x, long k);
// x^q for x > 0 and rational q.
BigReal pow(const BigReal& x, const Rational& q);
BigReal max_abs(const BigReal& a, const BigReal& b);

}  // namespace qwkb::arith
