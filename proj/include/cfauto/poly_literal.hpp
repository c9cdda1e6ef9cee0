#pragma once

#include <string_view>

#include "cfauto/unipoly.hpp"

namespace cfauto {

// GF(2)[t] literal: poly := term ('+' term)*, term := '1' | 't' | 't^' uint.
// Repeated terms cancel ("t+t" is 0). Spaces are ignored. Throws ParseError
// with the offending position (negative exponents included).
UniPoly parse_poly_literal(std::string_view text);

}  // namespace cfauto
