#include "qwkb/arith/big_real.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>

#include "qwkb/errors.hpp"

namespace qwkb::arith {

namespace {

mpfr_prec_t joint(const BigReal& a, const BigReal& b) {
  return static_cast<mpfr_prec_t>(std::max(a.precision(), b.precision()));
}

template <class Fn>
BigReal unary(const BigReal& x, Fn fn) {
  BigReal r(x.precision());
  fn(r.get(), x.get(), MPFR_RNDN);
  return r;
}

}  // namespace

void require_precision(long bits) {
  if (bits < kMinPrecisionBits)
    throw ConfigError("precision " + std::to_string(bits) + " bits is below the minimum of " +
                      std::to_string(kMinPrecisionBits));
}

BigReal::BigReal(long precision_bits) {
  mpfr_init2(v_, static_cast<mpfr_prec_t>(std::max(precision_bits, static_cast<long>(MPFR_PREC_MIN))));
  mpfr_set_zero(v_, 1);
}

BigReal::BigReal(long value, long precision_bits) : BigReal(precision_bits) {
  mpfr_set_si(v_, value, MPFR_RNDN);
}

BigReal::BigReal(const Rational& value, long precision_bits) : BigReal(precision_bits) {
  mpfr_set_q(v_, value.raw().get_mpq_t(), MPFR_RNDN);
}

BigReal::BigReal(const mpz_class& value, long precision_bits) : BigReal(precision_bits) {
  mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
}

BigReal::BigReal(std::string_view decimal, long precision_bits) : BigReal(precision_bits) {
  std::string s(decimal);
  char* end = nullptr;
  if (!s.empty()) mpfr_strtofr(v_, s.c_str(), &end, 10, MPFR_RNDN);
  if (s.empty() || end == s.c_str() || *end != '\0') throw ConfigError("not a decimal number: '" + s + "'");
}

BigReal::BigReal(const BigReal& other) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, other.v_);
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(v_); }

BigReal BigReal::with_precision(long bits) const {
  BigReal r(bits);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

long BigReal::exponent10() const {
  if (is_zero() || !is_finite()) return 0;
  BigReal t(64);
  mpfr_abs(t.v_, v_, MPFR_RNDN);
  mpfr_log10(t.v_, t.v_, MPFR_RNDD);
  mpfr_floor(t.v_, t.v_);
  long e = mpfr_get_si(t.v_, MPFR_RNDN);
  // Guard against log10 rounding across a power of ten.
  BigReal p(precision() + 16);
  mpfr_ui_pow_ui(p.v_, 10, static_cast<unsigned long>(std::labs(e) + 1), MPFR_RNDN);
  BigReal a(precision() + 16);
  mpfr_abs(a.v_, v_, MPFR_RNDN);
  BigReal ten_e(precision() + 16);
  mpfr_set_si(ten_e.v_, 10, MPFR_RNDN);
  mpfr_pow_si(ten_e.v_, ten_e.v_, e, MPFR_RNDN);
  if (mpfr_cmp(a.v_, ten_e.v_) < 0) return e - 1;
  mpfr_mul_ui(ten_e.v_, ten_e.v_, 10, MPFR_RNDN);
  if (mpfr_cmp(a.v_, ten_e.v_) >= 0) return e + 1;
  return e;
}

std::string BigReal::to_scientific(int digits) const {
  if (digits < 1) digits = 1;
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return sign() < 0 ? "-inf" : "inf";
  if (is_zero()) {
    std::string s = "0";
    if (digits > 1) s += "." + std::string(static_cast<size_t>(digits - 1), '0');
    return s + "e+00";
  }
  mpfr_exp_t e10 = 0;
  std::unique_ptr<char, void (*)(char*)> raw(
      mpfr_get_str(nullptr, &e10, 10, static_cast<size_t>(digits), v_, MPFR_RNDN), mpfr_free_str);
  std::string m(raw.get());
  std::string out;
  if (m.front() == '-') {
    out = "-";
    m.erase(0, 1);
  }
  out += m.substr(0, 1);
  if (m.size() > 1) out += "." + m.substr(1);
  const long e = static_cast<long>(e10) - 1;
  const long ae = std::labs(e);
  out += e < 0 ? "e-" : "e+";
  if (ae < 10) out += "0";
  out += std::to_string(ae);
  return out;
}

std::string BigReal::to_string() const {
  const int digits = static_cast<int>(static_cast<double>(precision()) * 0.30103) + 2;
  return to_scientific(digits);
}

BigReal& BigReal::operator+=(const BigReal& o) {
  if (o.precision() > precision()) mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator-=(const BigReal& o) {
  if (o.precision() > precision()) mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator*=(const BigReal& o) {
  if (o.precision() > precision()) mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator/=(const BigReal& o) {
  if (o.precision() > precision()) mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator*=(long k) {
  mpfr_mul_si(v_, v_, k, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator/=(long k) {
  mpfr_div_si(v_, v_, k, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator*=(const Rational& q) {
  mpfr_mul_q(v_, v_, q.raw().get_mpq_t(), MPFR_RNDN);
  return *this;
}

BigReal operator+(const BigReal& a, const BigReal& b) {
  BigReal r(static_cast<long>(joint(a, b)));
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigReal operator-(const BigReal& a, const BigReal& b) {
  BigReal r(static_cast<long>(joint(a, b)));
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigReal operator*(const BigReal& a, const BigReal& b) {
  BigReal r(static_cast<long>(joint(a, b)));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigReal operator/(const BigReal& a, const BigReal& b) {
  BigReal r(static_cast<long>(joint(a, b)));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigReal operator-(const BigReal& a) {
  BigReal r(a.precision());
  mpfr_neg(r.v_, a.v_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const BigReal& a, const BigReal& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.v_, b.v_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

BigReal abs(const BigReal& x) { return unary(x, mpfr_abs); }
BigReal sqrt(const BigReal& x) { return unary(x, mpfr_sqrt); }
BigReal cbrt(const BigReal& x) { return unary(x, mpfr_cbrt); }
BigReal exp(const BigReal& x) { return unary(x, mpfr_exp); }
BigReal log(const BigReal& x) { return unary(x, mpfr_log); }
BigReal atan(const BigReal& x) { return unary(x, mpfr_atan); }

BigReal floor(const BigReal& x) {
  BigReal r(x.precision());
  mpfr_floor(r.get(), x.get());
  return r;
}

BigReal pow(const BigReal& x, long k) {
  BigReal r(x.precision());
  mpfr_pow_si(r.get(), x.get(), k, MPFR_RNDN);
  return r;
}

BigReal pow(const BigReal& x, const Rational& q) {
  if (q.is_integer() && q.numerator().fits_slong_p()) return pow(x, q.numerator().get_si());
  const mpz_class den = q.denominator();
  if (den.fits_ulong_p() && q.numerator().fits_slong_p()) {
    BigReal r(x.precision() + 32);
    mpfr_rootn_ui(r.get(), x.get(), den.get_ui(), MPFR_RNDN);
    mpfr_pow_si(r.get(), r.get(), q.numerator().get_si(), MPFR_RNDN);
    return r.with_precision(x.precision());
  }
  BigReal e(q, x.precision());
  BigReal r(x.precision());
  mpfr_pow(r.get(), x.get(), e.get(), MPFR_RNDN);
  return r;
}

BigReal max_abs(const BigReal& a, const BigReal& b) {
  return mpfr_cmpabs(a.get(), b.get()) >= 0 ? abs(a) : abs(b);
}

}  // namespace qwkb::arith
