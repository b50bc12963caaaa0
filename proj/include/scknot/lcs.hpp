#pragma once

// Lower central series of pure braids: sampling of gamma_n elements and the
// finite-type certificate for their short-circuit closures.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "scknot/braid.hpp"

namespace scknot {

// Left-normed commutator [[..[g_1,g_2],g_3]..,g_n] of random A-generators
// A_{i,j}^{+-1} on `strands` strands; lies in gamma_n by construction.
PureBraid sample_gamma(int n, int strands, std::uint64_t seed);

struct CertificateReport {
  PureBraid braid;
  int n = 0;
  // Every implemented invariant of order < n, evaluated on the closure.
  std::vector<std::pair<std::string, std::int64_t>> invariants;
  bool consistent = true;

  // One line per invariant, then the verdict.
  std::string to_text() const;
};

// Closes b (included into the next odd strand count if needed) and checks
// that the invariants of order < n vanish. n must be 2, 3 or 4.
CertificateReport n_triviality_certificate(const PureBraid& b, int n);

}  // namespace scknot
