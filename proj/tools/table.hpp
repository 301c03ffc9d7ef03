#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace qwkb::cli {

// Null, integer or preformatted text (numbers already rendered at the
// requested digits, so CSV and JSON carry the same characters).
using Cell = std::variant<std::monostate, long, std::string>;

struct Table {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  // Trailing summary lines ("key: value").
  std::vector<std::pair<std::string, std::string>> notes;

  void add(std::vector<Cell> row);
};

enum class Format { Csv, Json };

Format parse_format(const std::string& name);

// CSV: header row, one line per row, null as an empty field, notes as
// "# key: value" lines. JSON: {"title", "columns", "rows": [{...}], "notes"}.
void render(const Table& t, Format f, std::ostream& out);

// Parses what render() wrote back into rows of text cells (null stays null).
std::vector<std::vector<std::optional<std::string>>> parse_csv_rows(const std::string& text);
std::vector<std::vector<std::optional<std::string>>> parse_json_rows(const std::string& text);

}  // namespace qwkb::cli
