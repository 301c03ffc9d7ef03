#include "qwkb/arith/rational.hpp"

#include "qwkb/errors.hpp"

namespace qwkb::arith {

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw RangeError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(mpz_class(s, 10));
    return Rational(mpz_class(s.substr(0, slash), 10), mpz_class(s.substr(slash + 1), 10));
  } catch (const std::invalid_argument&) {
    throw ConfigError("not a rational number: '" + s + "'");
  }
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw RangeError("rational division by zero");
  q_ /= o.q_;
  return *this;
}

Rational pow(const Rational& base, int exponent) {
  if (exponent < 0) return Rational(1) / pow(base, -exponent);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(num, den);
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

}  // namespace qwkb::arith
