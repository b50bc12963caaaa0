#pragma once

// The subgroups H^T and H^B of P_inf acting on the top and bottom of a braid
// without changing its short-circuit closure.
//
//   H^T: A_{i,i+1} and phi_i(A_{i,j}) for even i, all j != i  (left action)
//   H^B: the same with odd i                                   (right action)
//
// phi_i(A_{i,j}) is realized by expanding A_{i,j} on strands-1 strands and
// doubling strand i.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "scknot/braid.hpp"
#include "scknot/invariants.hpp"

namespace scknot {

enum class Side { top, bottom };
enum class GeneratorKind { adjacent, doubled };

const char* to_string(Side s);

struct CosetGenerator {
  Side side = Side::top;
  GeneratorKind kind = GeneratorKind::adjacent;
  int i = 0;
  int j = 0;  // doubled kind only; index in the undoubled braid
  PureBraid braid;

  // "A(2,3)" or "phi2(A(2,4))".
  std::string name() const;
};

// Requires odd strands >= 3.
std::vector<CosetGenerator> ht_generators(int strands);
std::vector<CosetGenerator> hb_generators(int strands);

// top: g^exponent * b, bottom: b * g^exponent, after including both into the
// larger strand count; freely reduced.
PureBraid apply_action(const PureBraid& b, const CosetGenerator& g, int exponent);

struct OrbitMove {
  Side side = Side::top;
  std::string generator;
  int exponent = 1;
};

struct OrbitWalk {
  std::vector<PureBraid> braids;  // steps + 1 entries, braids[0] is the start
  std::vector<OrbitMove> moves;   // moves[k] takes braids[k] to braids[k+1]
};

// Each step picks a side, a generator for the current strand count (or,
// with probability 1/4, two more strands) and an exponent uniformly.
OrbitWalk random_orbit_walk(const PureBraid& b, int steps, std::uint64_t seed);

struct OrbitLogRecord {
  int step = 0;
  std::optional<OrbitMove> move;  // empty for the starting braid
  std::size_t word_length = 0;
  Fingerprint fingerprint;

  std::string to_text() const;
};

std::vector<OrbitLogRecord> orbit_log(const OrbitWalk& walk, int crossing_cap = kDefaultCrossingCap);

enum class SearchOutcome { found, not_found_within_budget };

struct OrbitSearchResult {
  SearchOutcome outcome = SearchOutcome::not_found_within_budget;
  std::size_t explored = 0;
  // Moves from `from`, then inverse moves from `to`, meeting in the middle.
  std::vector<OrbitMove> path;
};

// Bounded bidirectional search for h_T * from * h_B == to with at most
// `depth` generator applications in total, on the common strand count.
// Equality is decided through the (faithful) Artin action. Never a
// decision procedure: exhausting the budget only reports that.
OrbitSearchResult orbit_search(const PureBraid& from, const PureBraid& to, int depth, std::size_t budget);

}  // namespace scknot
