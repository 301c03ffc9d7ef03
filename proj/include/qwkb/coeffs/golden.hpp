#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "qwkb/arith/big_real.hpp"

namespace qwkb::coeffs {

struct GoldenRow {
  long index = 0;
  std::vector<std::string> fields;  // columns after the index, as printed
};

// Reference table loaded from `<golden_dir>/<id>.tsv`. Files are UTF-8 with
// '#' comment lines and rows `index<TAB>value[<TAB>value...]`.
class GoldenTable {
 public:
  GoldenTable(std::string id, std::vector<std::string> comments, std::vector<GoldenRow> rows);

  const std::string& id() const noexcept { return id_; }
  const std::vector<std::string>& comments() const noexcept { return comments_; }
  const std::vector<GoldenRow>& rows() const noexcept { return rows_; }

  // First row with the given index; LookupError when absent.
  const GoldenRow& row(long index) const;
  // Column `col` (0 = first after the index) of that row, parsed at `bits`.
  arith::BigReal value(long index, std::size_t col, long bits) const;
  // Number of significant digits printed in a decimal field.
  static int printed_digits(std::string_view field);

 private:
  std::string id_;
  std::vector<std::string> comments_;
  std::vector<GoldenRow> rows_;
};

inline constexpr const char* kGoldenDirEnv = "QWKB_GOLDEN_DIR";

// Directory named by QWKB_GOLDEN_DIR, else the build-time default.
std::filesystem::path golden_dir();
// Known table identifiers.
const std::vector<std::string>& golden_ids();
// Unknown id -> LookupError; unreadable file -> ConfigError. Loaded tables are
// cached per directory.
const GoldenTable& golden(std::string_view id);
GoldenTable load_golden_file(const std::filesystem::path& path, std::string id);

}  // namespace qwkb::coeffs
