#include "table.hpp"

#include <json.hpp>
#include <sstream>

#include "qwkb/errors.hpp"

namespace qwkb::cli {

void Table::add(std::vector<Cell> row) {
  if (row.size() != columns.size()) throw Error("row width does not match the table header");
  rows.push_back(std::move(row));
}

Format parse_format(const std::string& name) {
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  throw ConfigError("unknown format '" + name + "' (expected csv or json)");
}

namespace {

std::string csv_field(const Cell& c) {
  if (std::holds_alternative<long>(c)) return std::to_string(std::get<long>(c));
  if (std::holds_alternative<std::string>(c)) {
    const std::string& s = std::get<std::string>(c);
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
  }
  return "";
}

nlohmann::ordered_json json_field(const Cell& c) {
  if (std::holds_alternative<long>(c)) return std::get<long>(c);
  if (std::holds_alternative<std::string>(c)) return std::get<std::string>(c);
  return nullptr;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        cur += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

void render(const Table& t, Format f, std::ostream& out) {
  if (f == Format::Csv) {
    for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << csv_field(t.columns[i]);
    out << '\n';
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
      out << '\n';
    }
    for (const auto& [k, v] : t.notes) out << "# " << k << ": " << v << '\n';
    return;
  }
  nlohmann::ordered_json j;
  j["title"] = t.title;
  j["columns"] = t.columns;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json r = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) r[t.columns[i]] = json_field(row[i]);
    j["rows"].push_back(std::move(r));
  }
  nlohmann::ordered_json notes = nlohmann::ordered_json::object();
  for (const auto& [k, v] : t.notes) notes[k] = v;
  j["notes"] = std::move(notes);
  out << j.dump(2) << '\n';
}

std::vector<std::vector<std::optional<std::string>>> parse_csv_rows(const std::string& text) {
  std::vector<std::vector<std::optional<std::string>>> rows;
  std::istringstream in(text);
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty() || line.front() == '#') continue;
    if (header) {
      header = false;
      continue;
    }
    std::vector<std::optional<std::string>> r;
    for (auto& f : split_csv_line(line)) r.push_back(f.empty() ? std::nullopt : std::optional<std::string>(f));
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<std::vector<std::optional<std::string>>> parse_json_rows(const std::string& text) {
  const auto j = nlohmann::ordered_json::parse(text);
  std::vector<std::vector<std::optional<std::string>>> rows;
  for (const auto& r : j.at("rows")) {
    std::vector<std::optional<std::string>> row;
    for (const auto& col : j.at("columns")) {
      const auto& v = r.at(col.get<std::string>());
      if (v.is_null())
        row.emplace_back(std::nullopt);
      else if (v.is_number_integer())
        row.emplace_back(std::to_string(v.get<long>()));
      else
        row.emplace_back(v.get<std::string>());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace qwkb::cli
