#pragma once

#include "isopar/poly.hpp"

namespace isopar {

// Parse `text` over `ring`.  Grammar: identifiers, + - * ^, parentheses,
// rational literals p/q, and sqrt(d) literals when quadext_d >= 2 (rational
// mode rejects sqrt).  Multiplication is explicit.  Syntax errors carry the
// offending position.
Poly parse_poly(const std::string& text, const RingPtr& ring,
                long quadext_d = 0);

}  // namespace isopar
