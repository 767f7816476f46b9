#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "smx/value.hpp"

namespace smx {

// Canonical text: sets as '{a,b}' with elements in value order, matrices
// as '[a,b;c,d]' with ';' between rows, no whitespace. parse(print(v)) == v.
std::string print(Value v);

// Surface grammar:
//   term   := set | matrix
//   set    := '{' [term (',' term)*] '}'
//   matrix := '[' row (';' row)* ']'
//   row    := term (',' term)*
// Whitespace is insignificant. Rows must have equal lengths; '[]' is
// rejected. Parsed matrices go through mk_matrix, so 1x1 wrappers collapse.
// Throws ParseError with a 1-based line:column position.
Value parse(std::string_view src);

// JSON form: {"kind":"set","elems":[...]} or
// {"kind":"matrix","rows":m,"cols":n,"entries":[... row-major ...]}.
nlohmann::json to_json(Value v);

// Validates and canonicalizes (dedup, sort, 1x1 erasure). Throws
// ValidationError on schema violations.
Value from_json(const nlohmann::json& j);

}  // namespace smx
