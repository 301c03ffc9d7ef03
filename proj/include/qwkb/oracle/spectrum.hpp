#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "qwkb/oracle/reference.hpp"

namespace qwkb::oracle {

struct OracleConfig {
  int basis_size = 240;        // harmonic-oscillator states per parity block
  std::string basis_frequency = "4";  // decimal omega of the basis
  long precision_bits = 512;
  int target_levels = 20;
  std::string convergence_tolerance = "1e-45";

  // ConfigError unless basis_size > 4 * target_levels, omega > 0, tolerance > 0
  // and the precision is supported.
  void validate() const;
  // FNV-1a digest of all fields, as 16 hex digits.
  std::string digest() const;
};

// Lowest `count` eigenvalues of one parity block (0 even, 1 odd) in a basis of
// `size` oscillator states with frequency omega.
std::vector<BigReal> solve_parity_block(int parity, int size, const BigReal& omega, int count);

// Rayleigh-Ritz in a scaled oscillator basis, certified by agreement with a
// 25% larger basis. ConvergenceError carries the digits achieved.
ReferenceSpectrum solve_spectrum(const OracleConfig& config);

// Cached variant: reads `<dir>/oracle-<digest>.tsv` when present, otherwise
// solves and writes it.
ReferenceSpectrum cached_spectrum(const OracleConfig& config, const std::filesystem::path& dir);

// Independent check by power-series shooting with psi(X) = 0 at a large X:
// eigenvalue of `level` bracketed and bisected to about `digits` digits.
BigReal shooting_eigenvalue(int level, int digits = 32);

}  // namespace qwkb::oracle
