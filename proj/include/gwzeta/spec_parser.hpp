#pragma once

#include <string>

#include "gwzeta/variety.hpp"

namespace gwzeta {

// Textual variety grammar:
//   S := Pn(n) | A(n) | Gr(r,n) | P1xP1 | resP1 | ell(A,B)
//      | prod(S,S) | disj(S,S) | table(FILE) | weil(FILE)
// Parse errors report the position and the expected tokens.
Variety parse_variety(const std::string& spec, const FqTag& f);

}  // namespace gwzeta
