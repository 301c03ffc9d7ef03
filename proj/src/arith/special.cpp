#include "qwkb/arith/special.hpp"

#include <map>
#include <mutex>
#include <vector>

#include "qwkb/errors.hpp"

namespace qwkb::arith {

namespace {

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

// Even-index Bernoulli numbers from the defining recursion, extended on demand.
const std::vector<Rational>& bernoulli_table(int k) {
  static std::vector<Rational> table{Rational(1), Rational(-1, 2)};
  if (static_cast<int>(table.size()) <= k) {
    const int n_max = k;
    std::vector<mpz_class> row;  // binomial row C(m+1, j)
    for (int m = static_cast<int>(table.size()); m <= n_max; ++m) {
      if (m % 2 == 1) {
        table.emplace_back(0);
        continue;
      }
      // sum_{j=0}^{m} C(m+1, j) B_j = 0
      Rational s;
      mpz_class c = 1;
      for (int j = 0; j < m; ++j) {
        if (!table[j].is_zero()) s += Rational(c) * table[j];
        c = c * (m + 1 - j) / (j + 1);
      }
      table.push_back(-s / Rational(m + 1));
    }
  }
  return table;
}

}  // namespace

Rational bernoulli(int k) {
  if (k < 0 || k > kBernoulliCap) throw RangeError("bernoulli index " + std::to_string(k) + " out of range");
  std::lock_guard<std::mutex> lock(cache_mutex());
  return bernoulli_table(k)[static_cast<std::size_t>(k)];
}

Rational binom_general(const Rational& x, int r) {
  if (r < 0) throw RangeError("negative binomial index");
  Rational p(1);
  for (int i = 0; i < r; ++i) p *= (x - Rational(i)) / Rational(i + 1);
  return p;
}

Rational pochhammer(const Rational& x, int q) {
  if (q < 0) throw RangeError("negative Pochhammer index");
  Rational p(1);
  for (int i = 0; i < q; ++i) p *= x + Rational(i);
  return p;
}

Rational gamma_shift_ratio(const Rational& x, const Rational& base) {
  const Rational diff = x - base;
  if (!diff.is_integer() || !diff.numerator().fits_sint_p())
    throw RangeError("gamma ratio arguments do not differ by an integer");
  const auto nonpositive_int = [](const Rational& v) { return v.is_integer() && v.sign() <= 0; };
  if (nonpositive_int(x) || nonpositive_int(base)) throw RangeError("gamma ratio at a pole");
  const int k = static_cast<int>(diff.numerator().get_si());
  if (k >= 0) return pochhammer(base, k);
  return Rational(1) / pochhammer(x, -k);
}

BigReal const_pi(long bits) {
  require_precision(bits);
  BigReal r(bits);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

BigReal const_gamma(long bits) {
  require_precision(bits);
  static std::map<long, BigReal> cache;
  {
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto it = cache.find(bits);
    if (it != cache.end()) return it->second;
  }
  BigReal quarter(bits + 16);
  mpfr_set_ui(quarter.get(), 1, MPFR_RNDN);
  mpfr_div_2ui(quarter.get(), quarter.get(), 2, MPFR_RNDN);
  BigReal r(bits);
  mpfr_gamma(r.get(), quarter.get(), MPFR_RNDN);
  std::lock_guard<std::mutex> lock(cache_mutex());
  return cache.emplace(bits, r).first->second;
}

BigReal const_alpha(long bits) {
  require_precision(bits);
  const long w = bits + 32;
  const BigReal pi = const_pi(w);
  const BigReal g = const_gamma(w);
  BigReal inner = BigReal(3, w) / (BigReal(2, w) * pow(g, 8));
  BigReal a = BigReal(3, w) * pi * pi * cbrt(inner);
  return a.with_precision(bits);
}

}  // namespace qwkb::arith
