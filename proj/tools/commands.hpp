#pragma once

#include <algorithm>
#include <filesystem>
#include <optional>
#include <string>

#include "qwkb/arith/big_real.hpp"
#include "qwkb/eigen/truncation.hpp"
#include "table.hpp"

namespace qwkb::cli {

struct RunConfig {
  long precision_bits = arith::kDefaultPrecisionBits;
  // Significant digits for values and for errors; unset means 41 and 8.
  std::optional<int> digits;
  Format format = Format::Csv;
  eigen::Strategy strategy = eigen::Strategy::LeastAddition;
  std::optional<int> order;
  std::optional<int> sd_order;
  // Order window such as "L-2..L+2" around the default order.
  std::optional<std::string> scan;
  // Oracle spectrum cache used by `verify oracle`.
  std::optional<std::filesystem::path> cache_dir;

  // ConfigError unless 1 <= digits <= 0.301 bits - 5 and the precision is supported.
  void validate() const;
  int max_digits() const { return static_cast<int>(static_cast<double>(precision_bits) * 0.301) - 5; }
  int value_digits() const { return digits.value_or(std::min(41, max_digits())); }
  int error_digits() const { return digits.value_or(8); }
};

// Inclusive index range "a..b" or a single "a".
struct IndexRange {
  int first = 0;
  int last = 0;
};
IndexRange parse_range(const std::string& text);

// Order window whose ends are integers or "L", "L+k", "L-k" relative to `base`.
IndexRange parse_scan(const std::string& text, int base);

Table cmd_coeff(const std::string& family, int n_max, const RunConfig& config);
// Methods: wkb, bcwkb, lincorr, cwkb, sd.
Table cmd_eigen(const IndexRange& levels, const std::string& method, const RunConfig& config);
// Methods: swkb, gexp, cswkb, hyp, sd.
Table cmd_sum(const IndexRange& counts, const std::string& method, const RunConfig& config);

struct VerifyResult {
  Table table;
  bool passed = false;
};
// Suites: coeffs, eigen, sums, oracle, all.
VerifyResult cmd_verify(const std::string& suite, const RunConfig& config);

}  // namespace qwkb::cli
