#pragma once

// Parser for factored polynomial expressions such as "2*(x+1)*x^3*(x-1)^2".
//
//   poly   := scale? factor ('*'? factor)*
//   scale  := rational '*'
//   factor := '(' var (('+'|'-') rational)? ')' ('^' posint)?
//           | var ('^' posint)?
//
// Rationals are integers, integer/integer, or decimals (converted exactly).
// Whitespace is ignored. Errors are JoinpiError with codes syntax (carrying
// the byte offset), duplicate_root or zero_scale.

#include <string_view>

#include "joinpi/rational_poly.hpp"

namespace joinpi {

FactoredPoly parse_factored_poly(std::string_view text, char variable);

}  // namespace joinpi
