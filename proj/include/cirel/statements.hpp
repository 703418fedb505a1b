#pragma once

#include <string>
#include <string_view>

#include "cirel/types.hpp"

namespace cirel {

// Line-oriented statement file:
//   # comment (anywhere; rest of line ignored)
//   vars A,B,C
//   indep A ; B | C      conditioning part optional
//   stable A ; B
// The vars line must come first and exactly once. Throws ParseError with the
// offending 1-based line number.
MixedRepresentation parse_statements(std::string_view text);

// Member names of s in declaration order, comma-joined.
std::string set_to_names(const Universe& universe, VarSet s);

// One statement line for t, e.g. "stable A ; B | C,D". The conditioning part
// is omitted when empty. kind is taken from t's flavor.
std::string statement_line(const Universe& universe, const Triplet& t);

// Full re-parseable file: vars line, stable block, indep block, each block in
// storage order. parse_statements(format_statements(m)) reproduces m.
std::string format_statements(const MixedRepresentation& m);

}  // namespace cirel
