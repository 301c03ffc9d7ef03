#include "qwkb/oracle/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "qwkb/errors.hpp"

namespace qwkb::oracle {

namespace {

// Symmetric matrix stored densely; only a narrow band is ever touched.
class BandMatrix {
 public:
  BandMatrix(int n, long bits) : n_(n), a_(static_cast<std::size_t>(n) * n, BigReal(bits)) {}
  int size() const { return n_; }
  BigReal& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const BigReal& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

 private:
  int n_;
  std::vector<BigReal> a_;
};

// Rotation in the (p, p+1) plane chosen to zero A(p+1, col); applied as a
// similarity on rows and columns within the band window.
void rotate_out(BandMatrix& A, int p, int col, long bits) {
  const int q = p + 1;
  const BigReal& x = A.at(p, col);
  const BigReal& y = A.at(q, col);
  if (y.is_zero()) return;
  BigReal r = sqrt(x * x + y * y);
  const BigReal c = x / r;
  const BigReal s = y / r;
  const int lo = std::max(0, p - 3);
  const int hi = std::min(A.size() - 1, q + 3);
  BigReal t1(bits), t2(bits);
  for (int j = lo; j <= hi; ++j) {
    t1 = c * A.at(p, j) + s * A.at(q, j);
    t2 = c * A.at(q, j) - s * A.at(p, j);
    A.at(p, j) = t1;
    A.at(q, j) = t2;
  }
  for (int i = lo; i <= hi; ++i) {
    t1 = c * A.at(i, p) + s * A.at(i, q);
    t2 = c * A.at(i, q) - s * A.at(i, p);
    A.at(i, p) = t1;
    A.at(i, q) = t2;
  }
  A.at(q, col) = BigReal(bits);
  A.at(col, q) = BigReal(bits);
}

// Number of eigenvalues of the tridiagonal (d, e) below x.
int sturm_count(const std::vector<BigReal>& d, const std::vector<BigReal>& e2, const BigReal& x, const BigReal& tiny) {
  int count = 0;
  BigReal q = d[0] - x;
  if (q.is_zero()) q = tiny;
  if (q.sign() < 0) ++count;
  for (std::size_t i = 1; i < d.size(); ++i) {
    q = d[i] - x - e2[i - 1] / q;
    if (q.is_zero()) q = tiny;
    if (q.sign() < 0) ++count;
  }
  return count;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

void OracleConfig::validate() const {
  arith::require_precision(precision_bits);
  if (target_levels < 1) throw ConfigError("oracle needs at least one target level");
  if (basis_size <= 4 * target_levels) throw ConfigError("oracle basis_size must exceed 4 * target_levels");
  if (!(BigReal(basis_frequency, 64).sign() > 0)) throw ConfigError("oracle basis frequency must be positive");
  if (!(BigReal(convergence_tolerance, 64).sign() > 0)) throw ConfigError("oracle tolerance must be positive");
}

std::string OracleConfig::digest() const {
  std::ostringstream key;
  key << basis_size << '|' << basis_frequency << '|' << precision_bits << '|' << target_levels << '|'
      << convergence_tolerance;
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << fnv1a(key.str());
  return out.str();
}

std::vector<BigReal> solve_parity_block(int parity, int size, const BigReal& omega, int count) {
  if (parity != 0 && parity != 1) throw RangeError("parity must be 0 or 1");
  if (count < 1 || count > size) throw RangeError("eigenvalue count outside the basis");
  const long bits = omega.precision();
  BandMatrix A(size, bits);
  const BigReal w4 = omega / 4L;
  const BigReal x4 = BigReal(1, bits) / (BigReal(8, bits) * omega * omega);
  // Oscillator state n = 2i + parity; H = T + x^4/2 couples n to n +- 2, n +- 4.
  for (int i = 0; i < size; ++i) {
    const long n = 2L * i + parity;
    const BigReal nb(n, bits);
    A.at(i, i) = w4 * BigReal(2 * n + 1, bits) + x4 * BigReal(6 * n * n + 6 * n + 3, bits);
    if (i + 1 < size) {
      const BigReal r = sqrt(BigReal((n + 1) * (n + 2), bits));
      A.at(i + 1, i) = -(w4 * r) + x4 * BigReal(4 * n + 6, bits) * r;
      A.at(i, i + 1) = A.at(i + 1, i);
    }
    if (i + 2 < size) {
      const BigReal r = sqrt(BigReal((n + 1) * (n + 2), bits) * BigReal((n + 3) * (n + 4), bits));
      A.at(i + 2, i) = x4 * r;
      A.at(i, i + 2) = A.at(i + 2, i);
    }
  }
  // Band to tridiagonal: clear (k+2, k), then chase the bulge at (i, i-3).
  for (int k = 0; k + 2 < size; ++k) {
    rotate_out(A, k + 1, k, bits);
    for (int i = k + 4; i < size; i += 2) rotate_out(A, i - 1, i - 3, bits);
  }
  std::vector<BigReal> d, e2;
  for (int i = 0; i < size; ++i) d.push_back(A.at(i, i));
  for (int i = 0; i + 1 < size; ++i) e2.push_back(A.at(i + 1, i) * A.at(i + 1, i));
  // Gershgorin bounds.
  BigReal lo = d[0], hi = d[0];
  for (int i = 0; i < size; ++i) {
    BigReal rad(bits);
    if (i > 0) rad += abs(A.at(i, i - 1));
    if (i + 1 < size) rad += abs(A.at(i + 1, i));
    if (d[i] - rad < lo) lo = d[i] - rad;
    if (d[i] + rad > hi) hi = d[i] + rad;
  }
  const BigReal tiny = pow(BigReal(2, bits), -(bits + 16));
  const BigReal rel = pow(BigReal(2, bits), -(bits - 8));
  std::vector<BigReal> out;
  for (int k = 0; k < count; ++k) {
    BigReal a = lo, b = hi;
    for (int it = 0; it < 4 * bits; ++it) {
      BigReal mid = (a + b) / 2L;
      if (sturm_count(d, e2, mid, tiny) > k) b = mid;
      else a = mid;
      if (b - a <= rel * max_abs(a, b)) break;
    }
    out.push_back((a + b) / 2L);
    lo = a;
  }
  return out;
}

ReferenceSpectrum solve_spectrum(const OracleConfig& config) {
  config.validate();
  const long bits = config.precision_bits;
  const BigReal omega(config.basis_frequency, bits);
  const BigReal tol(config.convergence_tolerance, bits);
  const int even = (config.target_levels + 1) / 2;
  const int odd = config.target_levels / 2;
  const int big = config.basis_size + (config.basis_size + 3) / 4;
  std::vector<BigReal> small_v[2], big_v[2];
  for (int parity = 0; parity < 2; ++parity) {
    const int count = parity == 0 ? even : odd;
    if (count == 0) continue;
    small_v[parity] = solve_parity_block(parity, config.basis_size, omega, count);
    big_v[parity] = solve_parity_block(parity, big, omega, count);
  }
  ReferenceSpectrum r;
  r.provenance = Provenance::Computed;
  BigReal worst(bits);
  for (int n = 0; n < config.target_levels; ++n) {
    const auto& sv = small_v[n % 2][static_cast<std::size_t>(n / 2)];
    const auto& bv = big_v[n % 2][static_cast<std::size_t>(n / 2)];
    const BigReal diff = abs(sv - bv);
    if (diff > worst) worst = diff;
    r.eigenvalues.push_back(bv);
    r.verified_digits.push_back(diff.is_zero() ? static_cast<int>(static_cast<double>(bits) * 0.30103)
                                               : static_cast<int>(-std::floor(std::log10(diff.to_double()))) - 1);
  }
  if (worst > tol) {
    const int achieved = worst.is_zero() ? 0 : static_cast<int>(-std::floor(std::log10(worst.to_double()))) - 1;
    throw ConvergenceError("oracle basis not converged: basis change moves an eigenvalue by " + worst.to_scientific(3),
                           achieved);
  }
  return r;
}

ReferenceSpectrum cached_spectrum(const OracleConfig& config, const std::filesystem::path& dir) {
  config.validate();
  const auto path = dir / ("oracle-" + config.digest() + ".tsv");
  if (std::ifstream in(path); in) {
    ReferenceSpectrum r;
    r.provenance = Provenance::Computed;
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line.front() == '#') continue;
      std::istringstream ss(line);
      int n = 0, digits = 0;
      std::string value;
      if (!(ss >> n >> value >> digits) || n != r.size()) {
        r.eigenvalues.clear();
        break;
      }
      r.eigenvalues.emplace_back(value, config.precision_bits);
      r.verified_digits.push_back(digits);
    }
    if (r.size() == config.target_levels) return r;
  }
  ReferenceSpectrum r = solve_spectrum(config);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (std::ofstream out(path); out) {
    out << "# oracle spectrum, config digest " << config.digest() << "\n# columns: n, eigenvalue, verified digits\n";
    for (int n = 0; n < r.size(); ++n)
      out << n << '\t' << r.eigenvalues[static_cast<std::size_t>(n)].to_string() << '\t'
          << r.verified_digits[static_cast<std::size_t>(n)] << '\n';
  }
  return r;
}

}  // namespace qwkb::oracle
