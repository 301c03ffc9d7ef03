#include <cmath>
#include <string>

#include "qwkb/errors.hpp"
#include "qwkb/oracle/spectrum.hpp"

namespace qwkb::oracle {

namespace {

// psi(X) for psi'' = (x^4 - 2E) psi with parity-fixed data at the origin,
// summed from the Taylor recurrence (k+2)(k+1) c_{k+2} = c_{k-4} - 2E c_k.
BigReal psi_at(const BigReal& E, const BigReal& X, int parity) {
  const long bits = E.precision();
  std::vector<BigReal> c;
  c.emplace_back(parity == 0 ? 1 : 0, bits);
  c.emplace_back(parity == 0 ? 0 : 1, bits);
  BigReal sum = parity == 0 ? BigReal(1, bits) : X;
  BigReal xp = X;  // X^{k+1} at the top of each step
  const BigReal twoE = E * 2L;
  const BigReal eps = pow(BigReal(2, bits), -(bits + 8));
  int quiet = 0;
  for (int k = 0; k < 100000; ++k) {
    BigReal next = -(twoE * c[static_cast<std::size_t>(k)]);
    if (k >= 4) next += c[static_cast<std::size_t>(k - 4)];
    next /= static_cast<long>((k + 2) * (k + 1));
    c.push_back(next);
    xp *= X;
    const BigReal term = c.back() * xp;
    sum += term;
    if (abs(term) <= abs(sum) * eps && k > 64) {
      if (++quiet > 8) break;
    } else {
      quiet = 0;
    }
  }
  return sum;
}

}  // namespace

BigReal shooting_eigenvalue(int level, int digits) {
  if (level < 0 || level > 5) throw RangeError("shooting check covers levels 0..5");
  if (digits < 1 || digits > 40) throw RangeError("shooting check digits must be in 1..40");
  const long bits = 1024;
  const int parity = level % 2;
  const BigReal X(6, bits);
  // Bracket the (level/2)-th root of this parity by scanning E.
  const BigReal step("0.05", bits);
  BigReal a(0, bits);
  BigReal fa = psi_at(a, X, parity);
  int roots = 0;
  for (int i = 0; i < 400; ++i) {
    BigReal b = a + step;
    BigReal fb = psi_at(b, X, parity);
    if (fa.sign() * fb.sign() < 0) {
      if (roots == level / 2) {
        const BigReal tol = pow(BigReal(10, bits), -(digits + 2));
        for (int it = 0; it < 400 && b - a > tol; ++it) {
          BigReal mid = (a + b) / 2L;
          BigReal fm = psi_at(mid, X, parity);
          if (fm.sign() * fa.sign() <= 0) b = mid;
          else {
            a = mid;
            fa = fm;
          }
        }
        return ((a + b) / 2L).with_precision(256);
      }
      ++roots;
    }
    a = b;
    fa = fb;
  }
  throw ConvergenceError("shooting did not bracket level " + std::to_string(level), 0);
}

}  // namespace qwkb::oracle
