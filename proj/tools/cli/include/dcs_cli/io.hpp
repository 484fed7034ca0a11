#pragma once

#include <string>
#include <string_view>

#include "dcs/coeff_seq.hpp"

namespace dcs::cli {

// Coefficient files: {"coeffs": [{"n": 1, "re": 1.0, "im": 0.0}, ...]}.
// Entries may come in any order; "im" defaults to 0. Throws InputError with
// the line/column of a syntax error or the path of the offending field.
CoeffSeq parse_coeffs(std::string_view text, std::string_view origin = "<input>");
CoeffSeq load_coeffs(const std::string& path);

// Canonical form: ascending indices, doubles printed to round-trip exactly.
std::string emit_coeffs(const CoeffSeq& a);

std::string read_file(const std::string& path);

}  // namespace dcs::cli
