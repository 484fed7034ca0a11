#include "dcs_cli/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "dcs/errors.hpp"

namespace dcs::cli {
namespace {

using nlohmann::json;

std::string position(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

[[noreturn]] void fail(std::string_view origin, const std::string& msg) {
  throw InputError(std::string(origin) + ": " + msg);
}

double number_field(const json& entry, const char* key, const std::string& path,
                    std::string_view origin, bool required) {
  auto it = entry.find(key);
  if (it == entry.end()) {
    if (required) fail(origin, path + "." + key + ": missing");
    return 0.0;
  }
  if (!it->is_number()) fail(origin, path + "." + key + ": expected a number");
  return it->get<double>();
}

}  // namespace

CoeffSeq parse_coeffs(std::string_view text, std::string_view origin) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    fail(origin, "malformed JSON at " + position(text, e.byte == 0 ? 0 : e.byte - 1));
  }
  if (!doc.is_object()) fail(origin, "top level must be an object");
  auto coeffs = doc.find("coeffs");
  if (coeffs == doc.end()) fail(origin, "missing field \"coeffs\"");
  if (!coeffs->is_array()) fail(origin, "coeffs: expected an array");

  std::vector<CoeffEntry> entries;
  entries.reserve(coeffs->size());
  for (std::size_t i = 0; i < coeffs->size(); ++i) {
    const json& entry = (*coeffs)[i];
    const std::string path = "coeffs[" + std::to_string(i) + "]";
    if (!entry.is_object()) fail(origin, path + ": expected an object");
    auto n = entry.find("n");
    if (n == entry.end()) fail(origin, path + ".n: missing");
    if (!n->is_number_integer()) fail(origin, path + ".n: expected an integer");
    if (n->is_number_unsigned() ? n->get<std::uint64_t>() < 1 : n->get<std::int64_t>() < 1)
      fail(origin, path + ".n: index must be >= 1");
    const double re = number_field(entry, "re", path, origin, true);
    const double im = number_field(entry, "im", path, origin, false);
    entries.push_back({n->get<std::uint64_t>(), Complex(re, im)});
  }

  std::vector<std::size_t> order(entries.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return entries[a].index < entries[b].index; });
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (entries[order[k]].index == entries[order[k - 1]].index)
      fail(origin, "coeffs[" + std::to_string(order[k]) + "].n: duplicate index " +
                       std::to_string(entries[order[k]].index) + " (also at coeffs[" +
                       std::to_string(order[k - 1]) + "])");
  }
  return CoeffSeq::from_entries(std::move(entries));
}

CoeffSeq load_coeffs(const std::string& path) { return parse_coeffs(read_file(path), path); }

std::string emit_coeffs(const CoeffSeq& a) {
  json arr = json::array();
  for (const auto& [n, v] : a.entries())
    arr.push_back(json{{"n", n}, {"re", v.real()}, {"im", v.imag()}});
  json doc = json::object();
  doc["coeffs"] = std::move(arr);
  return doc.dump() + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace dcs::cli
