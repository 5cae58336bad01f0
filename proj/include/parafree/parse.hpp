#pragma once

#include <string>
#include <string_view>

#include "parafree/coset.hpp"
#include "parafree/word.hpp"

namespace parafree {

// Word grammar: generator identifiers, `^` with (possibly negative) integer
// exponents, `*` or juxtaposition for products, `[x,y]` for commutators,
// parentheses for grouping, `1` for the identity. Example: (a*[b,a])^3
Word parse_word(const Alphabet& alphabet, std::string_view text);

// Presentation grammar: `<g1,...,gm | r1, ..., rn>` with words as above.
// The relator list may be empty. Relators that reduce to the identity are
// rejected.
Presentation parse_presentation(std::string_view text);

std::string to_string(const Presentation& pres);

}  // namespace parafree
