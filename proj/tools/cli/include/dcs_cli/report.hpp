#pragma once

#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include "dcs/enclosure.hpp"

namespace dcs::cli {

using Value = std::variant<bool, std::int64_t, double, std::string>;

struct Field {
  std::string key;
  Value value;

  friend bool operator==(const Field&, const Field&) = default;
};

// Significant digits kept for every reported double.
inline constexpr int kReportDigits = 12;

double round_digits(double v);

// One computation record: ordered key/value pairs. Doubles are rounded to
// kReportDigits on insertion, so a JSON round trip is exact.
class Record {
 public:
  Record& set_value(std::string key, Value v);
  template <std::integral T>
  Record& set(std::string key, T v) {
    if constexpr (std::is_same_v<T, bool>) return set_value(std::move(key), v);
    else return set_value(std::move(key), static_cast<std::int64_t>(v));
  }
  Record& set(std::string key, double v) { return set_value(std::move(key), v); }
  Record& set(std::string key, std::string v) { return set_value(std::move(key), std::move(v)); }
  Record& set(std::string key, const char* v) { return set_value(std::move(key), std::string(v)); }
  // Stored as key_lo, key_hi.
  Record& set(const std::string& key, const Enclosure& e);

  const std::vector<Field>& fields() const noexcept { return fields_; }
  const Value* find(std::string_view key) const;

  friend bool operator==(const Record&, const Record&) = default;

 private:
  std::vector<Field> fields_;
};

struct Report {
  // CSV header. Empty means the union of record keys in first-seen order.
  std::vector<std::string> columns;
  std::vector<Record> records;
};

enum class Format { json, csv };

// json: an array with one object per record. csv: header plus one row per
// record; a missing field is an empty cell.
std::string emit_report(const Report& report, Format format);

// Inverse of the json format. Throws InputError.
std::vector<Record> parse_report_json(std::string_view text);

}  // namespace dcs::cli
