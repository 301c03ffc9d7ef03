#pragma once

#include <vector>

#include "qwkb/arith/big_real.hpp"

namespace qwkb::oracle {

using arith::BigReal;

enum class Provenance { Embedded, Computed, CrossChecked };

// Exact eigenvalues of -(1/2) d^2/dx^2 + x^4/2, lowest first.
struct ReferenceSpectrum {
  std::vector<BigReal> eigenvalues;
  std::vector<int> verified_digits;
  Provenance provenance = Provenance::Embedded;

  int size() const noexcept { return static_cast<int>(eigenvalues.size()); }
  // RangeError when n is not covered.
  const BigReal& eigenvalue(int n) const;
  // Sum of the lowest N eigenvalues; zero for N = 0.
  BigReal partial_sum(int N) const;
};

// Twenty eigenvalues to 41 decimals, compiled in.
ReferenceSpectrum embedded_reference(long bits = 256);

enum class ErrorKind { Eigenvalue, Sum };

// approximate - exact. For sums the exact value is the partial sum of the
// lowest `index` eigenvalues.
BigReal error_of(const BigReal& value, int index, const ReferenceSpectrum& reference, ErrorKind kind);

}  // namespace qwkb::oracle
