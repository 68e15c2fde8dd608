#pragma once

// Text format for one interval exchange (a JSON object):
//
//   {
//     "modulus": "c0,...,cn",        integer coefficients, constant first
//     "root_interval": "lo,hi",
//     "total": "q0,...,q(d-1)",      power-basis coordinates
//     "lengths": ["...", ...],
//     "perm": [p1, ..., pn],         1-based image positions
//     "circle": true | false
//   }
//
// Emission is canonical: reduced fractions, fixed key order, two-space indent,
// trailing newline. parse(emit(f)) reproduces f exactly.

#include "ietsaf/iet.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace ietsaf {

using OrderedJson = nlohmann::ordered_json;

OrderedJson iet_to_json(const Iet& f);
Iet iet_from_json(const OrderedJson& j);

std::string emit_iet(const Iet& f);
// Throws InvalidInput with line/column for syntax errors and the violated invariant otherwise.
Iet parse_iet(std::string_view text);

Iet read_iet_file(const std::string& path);
void write_iet_file(const std::string& path, const Iet& f);

}  // namespace ietsaf
