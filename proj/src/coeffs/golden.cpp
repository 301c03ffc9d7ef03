#include "qwkb/coeffs/golden.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "qwkb/errors.hpp"

#ifndef QWKB_GOLDEN_DIR_DEFAULT
#define QWKB_GOLDEN_DIR_DEFAULT "data/golden"
#endif

namespace qwkb::coeffs {

GoldenTable::GoldenTable(std::string id, std::vector<std::string> comments, std::vector<GoldenRow> rows)
    : id_(std::move(id)), comments_(std::move(comments)), rows_(std::move(rows)) {}

const GoldenRow& GoldenTable::row(long index) const {
  auto it = std::find_if(rows_.begin(), rows_.end(), [&](const GoldenRow& r) { return r.index == index; });
  if (it == rows_.end()) throw LookupError("table " + id_ + " has no row " + std::to_string(index));
  return *it;
}

arith::BigReal GoldenTable::value(long index, std::size_t col, long bits) const {
  const GoldenRow& r = row(index);
  if (col >= r.fields.size())
    throw LookupError("table " + id_ + " row " + std::to_string(index) + " has no column " + std::to_string(col));
  return arith::BigReal(r.fields[col], bits);
}

int GoldenTable::printed_digits(std::string_view field) {
  int digits = 0;
  bool leading = true;
  for (char ch : field) {
    if (ch == 'e' || ch == 'E') break;
    if (!std::isdigit(static_cast<unsigned char>(ch))) continue;
    if (leading && ch == '0') continue;
    leading = false;
    ++digits;
  }
  return digits;
}

std::filesystem::path golden_dir() {
  if (const char* env = std::getenv(kGoldenDirEnv); env != nullptr && *env != '\0') return env;
  return QWKB_GOLDEN_DIR_DEFAULT;
}

const std::vector<std::string>& golden_ids() {
  static const std::vector<std::string> ids{
      "eigenvalues", "a", "a_exact", "b", "b_exact", "d", "h", "c", "q", "d_sums",
      "eps_sd", "eps_sd_short", "sum_sd", "sum_sd_asym", "eigen_orders", "sum_orders"};
  return ids;
}

GoldenTable load_golden_file(const std::filesystem::path& path, std::string id) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read golden table " + path.string());
  std::vector<std::string> comments;
  std::vector<GoldenRow> rows;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.front() == '#') {
      const auto start = line.find_first_not_of("# ");
      comments.push_back(start == std::string::npos ? std::string() : line.substr(start));
      continue;
    }
    std::stringstream ss(line);
    std::string field;
    GoldenRow row;
    bool first = true;
    while (std::getline(ss, field, '\t')) {
      if (first) {
        char* end = nullptr;
        row.index = std::strtol(field.c_str(), &end, 10);
        if (field.empty() || *end != '\0')
          throw ConfigError(path.string() + ":" + std::to_string(line_no) + ": bad row index '" + field + "'");
        first = false;
      } else {
        row.fields.push_back(field);
      }
    }
    rows.push_back(std::move(row));
  }
  return GoldenTable(std::move(id), std::move(comments), std::move(rows));
}

const GoldenTable& golden(std::string_view id) {
  const auto& ids = golden_ids();
  if (std::find(ids.begin(), ids.end(), id) == ids.end())
    throw LookupError("unknown golden table '" + std::string(id) + "'");
  static std::mutex mutex;
  static std::map<std::string, std::unique_ptr<GoldenTable>> cache;
  const std::filesystem::path path = golden_dir() / (std::string(id) + ".tsv");
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(path.string());
  if (it == cache.end())
    it = cache.emplace(path.string(), std::make_unique<GoldenTable>(load_golden_file(path, std::string(id)))).first;
  return *it->second;
}

}  // namespace qwkb::coeffs
