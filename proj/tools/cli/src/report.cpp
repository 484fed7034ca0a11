#include "dcs_cli/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include <json.hpp>

#include "dcs/errors.hpp"

namespace dcs::cli {
namespace {

using ojson = nlohmann::ordered_json;

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", kReportDigits, v);
  return buf;
}

std::string csv_cell(const Value& v) {
  struct {
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(std::int64_t i) const { return std::to_string(i); }
    std::string operator()(double d) const { return format_double(d); }
    std::string operator()(const std::string& s) const {
      if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
      std::string out = "\"";
      for (char c : s) {
        if (c == '"') out += '"';
        out += c;
      }
      return out + "\"";
    }
  } visitor;
  return std::visit(visitor, v);
}

}  // namespace

double round_digits(double v) {
  if (!std::isfinite(v) || v == 0.0) return v;
  return std::strtod(format_double(v).c_str(), nullptr);
}

Record& Record::set_value(std::string key, Value v) {
  if (auto* d = std::get_if<double>(&v)) {
    if (!std::isfinite(*d)) v = std::string(std::isnan(*d) ? "nan" : (*d > 0 ? "inf" : "-inf"));
    else *d = round_digits(*d);
  }
  auto it = std::find_if(fields_.begin(), fields_.end(),
                         [&](const Field& f) { return f.key == key; });
  if (it != fields_.end()) it->value = std::move(v);
  else fields_.push_back({std::move(key), std::move(v)});
  return *this;
}

Record& Record::set(const std::string& key, const Enclosure& e) {
  set(key + "_lo", e.lo);
  return set(key + "_hi", e.hi);
}

const Value* Record::find(std::string_view key) const {
  for (const auto& f : fields_)
    if (f.key == key) return &f.value;
  return nullptr;
}

std::string emit_report(const Report& report, Format format) {
  if (format == Format::json) {
    ojson arr = ojson::array();
    for (const auto& rec : report.records) {
      ojson obj = ojson::object();
      for (const auto& [key, value] : rec.fields())
        std::visit([&](const auto& x) { obj[key] = x; }, value);
      arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
  }

  std::vector<std::string> columns = report.columns;
  if (columns.empty()) {
    for (const auto& rec : report.records)
      for (const auto& f : rec.fields())
        if (std::find(columns.begin(), columns.end(), f.key) == columns.end())
          columns.push_back(f.key);
  }
  std::string out;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) out += ',';
    out += columns[i];
  }
  out += '\n';
  for (const auto& rec : report.records) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (i) out += ',';
      if (const Value* v = rec.find(columns[i])) out += csv_cell(*v);
    }
    out += '\n';
  }
  return out;
}

std::vector<Record> parse_report_json(std::string_view text) {
  ojson doc;
  try {
    doc = ojson::parse(text.begin(), text.end());
  } catch (const ojson::parse_error& e) {
    throw InputError(std::string("report: malformed JSON: ") + e.what());
  }
  if (!doc.is_array()) throw InputError("report: top level must be an array of records");
  std::vector<Record> out;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& obj = doc[i];
    if (!obj.is_object())
      throw InputError("report: record " + std::to_string(i) + " is not an object");
    Record rec;
    for (const auto& [key, v] : obj.items()) {
      if (v.is_boolean()) rec.set_value(key, v.get<bool>());
      else if (v.is_number_integer()) rec.set_value(key, v.get<std::int64_t>());
      else if (v.is_number_float()) rec.set_value(key, v.get<double>());
      else if (v.is_string()) rec.set_value(key, v.get<std::string>());
      else
        throw InputError("report: record " + std::to_string(i) + " field \"" + key +
                         "\" has an unsupported type");
    }
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace dcs::cli
