#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qwkb/arith/big_real.hpp"
#include "qwkb/oracle/spectrum.hpp"

namespace qwkb::verify {

using arith::BigReal;

// One computed cell compared against its golden counterpart.
struct Check {
  std::string table;
  long index = 0;
  std::string column;
  std::string expected;  // as printed in the golden table
  std::string computed;  // rendered at the printed digit count
  bool pass = false;
  double abs_dev = 0.0;
  double rel_dev = 0.0;
};

struct Report {
  std::string suite;
  std::vector<Check> checks;
  std::size_t mismatches() const;
  bool passed() const { return mismatches() == 0; }
  // Largest deviations over all cells; zero for an empty report.
  double worst_abs() const;
  double worst_rel() const;
  // Checks restricted to one golden table.
  Report only(std::string_view table) const;
  void append(const Report& other);
};

// Half a unit in the last printed digit of a decimal field.
BigReal half_ulp(std::string_view field, long bits);

// |x - field| <= half_ulp(field).
Check compare_printed(std::string table, long index, std::string column, const BigReal& x, std::string_view field);
// |x - field| <= tolerance.
Check compare_absolute(std::string table, long index, std::string column, const BigReal& x, std::string_view field,
                       const BigReal& tolerance);
// Integer or exact-text equality.
Check compare_text(std::string table, long index, std::string column, const std::string& computed,
                   std::string_view field);

// Coefficient tables: a, a_exact, b, b_exact, d, h, c, q (values and ratio columns).
Report verify_coeffs(long bits = arith::kDefaultPrecisionBits);
// Eigenvalue tables: d_sums, eps_sd, eps_sd_short, eigen_orders.
Report verify_eigen(long bits = arith::kDefaultPrecisionBits);
// Sum tables: sum_sd, sum_sd_asym, sum_orders.
Report verify_sums(long bits = arith::kDefaultPrecisionBits);
// Oracle spectrum against the eigenvalue table at 1e-40 absolute.
Report verify_oracle(const oracle::OracleConfig& config = {},
                     const std::optional<std::filesystem::path>& cache_dir = std::nullopt);

}  // namespace qwkb::verify
