#pragma once

// Long-knot diagrams from braids.
//
// Short-circuit closure of b in P_{2n+1}: strands are traversed alternately
// (strand 1 downwards, strand 2 upwards, ..., strand 2n+1 downwards); bottoms
// of (1,2),(3,4),... and tops of (2,3),(4,5),... are joined by crossing-free
// caps; the knot enters at the top of strand 1 and leaves at the bottom of
// strand 2n+1. Every letter becomes exactly one crossing.

#include <utility>
#include <vector>

#include "scknot/braid.hpp"
#include "scknot/diagram.hpp"

namespace scknot {

LongKnotDiagram short_circuit_close(const PureBraid& b);

// Non-crossing perfect matchings of the top and bottom endpoints 1..2n.
struct PlatPairing {
  std::vector<std::pair<int, int>> top;
  std::vector<std::pair<int, int>> bottom;

  // (1,2),(3,4),...,(2n-1,2n) on both sides.
  static PlatPairing standard(int strands);
};

// Plat closure cut open at the cap covering top position 1; the long knot
// starts downwards at top position 1. Throws DomainError for odd strand
// counts, invalid or crossing pairings, and multi-component closures (the
// message reports the component count).
LongKnotDiagram plat_close(const SigmaWord& w, const PlatPairing& pairing);
// Number of components of the plat closure.
int plat_component_count(const SigmaWord& w, const PlatPairing& pairing);

// s_1 s_2 ... s_{2n-1} on 2n strands: carries the strand at top position 1
// under all others to position 2n. For x in P_{2n-1},
// plat_close(t_braid(n) * include(x, 2n)) is the knot of
// short_circuit_close(x) with reversed orientation.
SigmaWord t_braid(int n);

LongKnotDiagram connect_sum(const LongKnotDiagram& d1, const LongKnotDiagram& d2);

// Reidemeister I and II reductions until none apply.
LongKnotDiagram simplify(const LongKnotDiagram& d);

LongKnotDiagram mirror(const LongKnotDiagram& d);

// n+1 where 2n+1 is the smallest odd strand count containing every letter.
int bridge_upper_bound(const PureBraid& b);

}  // namespace scknot
