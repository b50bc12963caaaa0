#pragma once

// Text grammar for braid words. Tokens are separated by whitespace:
//   s<k>          s<k>^-1
//   A(<i>,<j>)    A(<i>,<j>)^<e>    A(<i>,<j>)^-<e>
// A-generators are expanded to sigma letters on input.

#include <optional>
#include <string_view>

#include "scknot/braid.hpp"

namespace scknot {

struct ParsedWord {
  SigmaWord word;
  // True when no strand count was supplied and it was inferred as the
  // fewest strands holding every token: k+1 for s<k>, j for A(i,j).
  bool inferred_strands = false;
};

// Throws ParseError (with character offset) on malformed tokens and
// DomainError when an explicit strand count is too small.
ParsedWord parse_braid_word(std::string_view text, std::optional<int> strands = std::nullopt);

}  // namespace scknot
