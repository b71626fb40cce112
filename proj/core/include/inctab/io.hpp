#pragma once

#include <istream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "inctab/tableau.hpp"

namespace inctab {

using json = nlohmann::json;

// Text format:
//
//   q=6 shape=2x3
//   1 2 4
//   3 4 6
//
// One line per shape row, entries separated by spaces; "." marks inner (absent)
// boxes of a skew shape and "*" a bullet. Blank lines and lines starting with
// '#' are ignored. JSON alternative:
//
//   {"q":6,"outer":[3,3],"inner":[],"rows":[[1,2,4],[3,4,6]]}
//
// where rows list only the shape's boxes and a bullet is null.

/// A parsed filling; `bullets` tells whether any bullet was present.
struct ParsedFilling {
  BulletFilling filling;
  bool bullets = false;
};

/// Accepts either format (JSON when the first non-blank character is '{').
/// Throws ParseError with line and column on malformed input.
ParsedFilling parse_filling(std::string_view text);

/// Like parse_filling but also requires an increasing tableau with entries in [1, q].
/// Throws ValidationError with line and column of the first offending entry.
IncreasingTableau parse_tableau(std::string_view text);

/// Reads a whole file, or stdin for "-".
std::string read_input(const std::string& path);

std::string format_text(const IncreasingTableau& t);
std::string format_text(const BulletFilling& x);

json to_json(const IncreasingTableau& t);
json to_json(const BulletFilling& x);
IncreasingTableau tableau_from_json(const json& j);

json to_json(const Box& b);
Box box_from_json(const json& j);

/// "(1,2),(2,1)" -> boxes. Throws ParseError.
std::vector<Box> parse_box_list(std::string_view text);

}  // namespace inctab
