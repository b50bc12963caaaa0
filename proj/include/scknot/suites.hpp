#pragma once

// Seeded randomized property suites. Case k of a suite draws everything from
// case_seed(seed, k), so a failing case is reproduced by its seed alone and
// the report does not depend on how cases were scheduled.
//
//   stabilize  sigma(include(b, strands+2)) has the fingerprint of sigma(b)
//   tensor     sigma(b1 (x) b2) against connect_sum(sigma(b1), sigma(b2))
//   orbit      one H^T / H^B action leaves the fingerprint of sigma fixed
//   lcs        gamma_3 / gamma_4 samples: certificate and Johnson degree
//   plat       plat_close(t_braid * x) against sigma(x), up to mirror

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "scknot/invariants.hpp"

namespace scknot {

inline constexpr int kSuiteCrossingCap = 80;

const std::vector<std::string>& suite_names();
bool is_suite(std::string_view name);

struct CaseResult {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  bool passed = false;
  std::string detail;  // what was checked, or why it failed
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t count = 0;
  std::vector<CaseResult> cases;  // ordered by index

  std::size_t passed() const;
  bool ok() const { return passed() == count; }
  // Header, one line per failing case with its seed, then the tally.
  std::string to_text() const;
};

// Throws DomainError for an unknown suite name.
CaseResult run_case(std::string_view suite, std::uint64_t seed, std::size_t index);
SuiteReport run_suite(std::string_view suite, std::uint64_t seed, std::size_t count,
                      Execution exec = Execution::parallel);

// Single-case drivers, also used directly by the acceptance checks.
CaseResult stabilize_case(std::uint64_t case_seed);
CaseResult tensor_case(std::uint64_t case_seed);
CaseResult orbit_case(std::uint64_t case_seed);
// n is 3 or 4.
CaseResult lcs_case(std::uint64_t case_seed, int n);
CaseResult plat_case(std::uint64_t case_seed);

}  // namespace scknot
