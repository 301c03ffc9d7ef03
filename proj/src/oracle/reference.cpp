#include "qwkb/oracle/reference.hpp"

#include <array>
#include <string>

#include "qwkb/errors.hpp"

namespace qwkb::oracle {

namespace {

constexpr std::array<const char*, 20> kEigenvalues{
    "0.53018104524209144982352300834633177275760",  "1.89983651490069708439154709425628447888303",
    "3.72784896899336919607829567359288374406891",  "5.82237275568908101042518664068546821827544",
    "8.13091300942511296894747721519230676712229",  "10.61918645911797001207485555679431818835242",
    "13.26423559184125909590691409184061396448786", "16.04929885548416331713605321916594834377996",
    "18.96150051351699257325818927595497722773812", "21.99057904864486539265905687641368239738974",
    "25.12812725834145951987229405263137996805062", "28.36710702758651802365083551672587875609325",
    "31.70152349335944748604674246147231780864901", "35.12619731430829544456542596900956718356056",
    "38.63660024099198285472718722061650648880103", "42.22873313747097946444416863827981122051197",
    "45.89903340449556703492441333126139251356587", "49.64430333024663982290990336326178369064809",
    "53.46165369086626282653755106808336737954231", "57.34845869249258776907546415989160724528593"};

}  // namespace

const BigReal& ReferenceSpectrum::eigenvalue(int n) const {
  if (n < 0 || n >= size())
    throw RangeError("reference spectrum covers levels 0.." + std::to_string(size() - 1) + ", level " +
                     std::to_string(n) + " requested");
  return eigenvalues[static_cast<std::size_t>(n)];
}

BigReal ReferenceSpectrum::partial_sum(int N) const {
  if (N < 0 || N > size())
    throw RangeError("reference spectrum holds " + std::to_string(size()) + " levels, sum of " + std::to_string(N) +
                     " requested");
  BigReal s(eigenvalues.empty() ? arith::kDefaultPrecisionBits : eigenvalues.front().precision());
  for (int j = 0; j < N; ++j) s += eigenvalues[static_cast<std::size_t>(j)];
  return s;
}

ReferenceSpectrum embedded_reference(long bits) {
  arith::require_precision(bits);
  ReferenceSpectrum r;
  r.provenance = Provenance::Embedded;
  for (const char* v : kEigenvalues) {
    r.eigenvalues.emplace_back(v, bits);
    const std::string s(v);
    r.verified_digits.push_back(static_cast<int>(s.size() - s.find('.') - 1));
  }
  return r;
}

BigReal error_of(const BigReal& value, int index, const ReferenceSpectrum& reference, ErrorKind kind) {
  if (kind == ErrorKind::Eigenvalue) return value - reference.eigenvalue(index);
  return value - reference.partial_sum(index);
}

}  // namespace qwkb::oracle
