#pragma once

#include "qwkb/arith/big_real.hpp"
#include "qwkb/arith/rational.hpp"

namespace qwkb::arith {

inline constexpr int kBernoulliCap = 512;

// Exact Bernoulli number with B_1 = -1/2. Odd k > 1 gives exact zero.
// Throws RangeError for k < 0 or k > kBernoulliCap.
Rational bernoulli(int k);

// x(x-1)...(x-r+1)/r!
Rational binom_general(const Rational& x, int r);

// Rising factorial x(x+1)...(x+q-1).
Rational pochhammer(const Rational& x, int q);

// Gamma(x)/Gamma(base) for x - base an integer; throws RangeError otherwise
// or when a pole is hit.
Rational gamma_shift_ratio(const Rational& x, const Rational& base);

// Constants rounded to `bits`; each throws ConfigError below kMinPrecisionBits.
BigReal const_pi(long bits);
BigReal const_gamma(long bits);  // Gamma(1/4)
BigReal const_alpha(long bits);  // 3 pi^2 (3 / (2 gamma^8))^(1/3)

}  // namespace qwkb::arith
