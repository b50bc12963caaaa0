#pragma once

// Exhaustive enumeration of short A-generator words and the distinct knots
// (by fingerprint) their short-circuit closures produce.

#include <cstddef>
#include <string>
#include <vector>

#include "scknot/braid.hpp"
#include "scknot/invariants.hpp"

namespace scknot {

struct SearchEntry {
  Fingerprint fingerprint;
  std::vector<AGenerator> word;  // first word reaching this fingerprint
  PureBraid braid;
  int bridge_upper_bound = 1;
  std::size_t hits = 0;  // words in the enumeration with this fingerprint

  std::string word_text() const;  // "A(1,2) A(1,3)^-1", "1" for the empty word
};

struct SearchSummary {
  int strands = 3;
  int max_length = 0;
  std::size_t words = 0;  // freely reduced words enumerated
  std::vector<SearchEntry> entries;  // in order of first appearance
};

// All freely reduced words of length <= max_length in A_{i,j}^{+-1},
// 1 <= i < j <= strands, enumerated by length then lexicographically.
// strands must be odd.
SearchSummary enumerate_closures(int strands, int max_length, int crossing_cap = kDefaultCrossingCap,
                                 Execution exec = Execution::parallel);

}  // namespace scknot
