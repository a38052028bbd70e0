#pragma once

#include <string_view>

#include "qchow/sparse_poly.hpp"

namespace qchow {

// Parses an integer polynomial expression built from + - * ^ and
// parentheses over l1 l2 l3 c1 c2 c3 h.  The variable set is inferred from
// the names used; `fallback` applies when only h or constants occur.
SparsePoly parse_poly(std::string_view text, Varset fallback = Varset::C);

}  // namespace qchow
