#pragma once

// Knot invariants of long-knot diagrams: Kauffman bracket, Jones polynomial,
// writhe, and the finite-type invariants v2 and v3 from based Gauss-diagram
// formulas.

#include <cstdint>
#include <string>
#include <string_view>

#include "scknot/diagram.hpp"
#include "scknot/laurent.hpp"

namespace scknot {

inline constexpr int kDefaultCrossingCap = 40;
// Largest diagram the 2^c state enumeration accepts.
inline constexpr int kExhaustiveCrossingCap = 26;

enum class Execution { serial, parallel };

std::int64_t writhe(const LongKnotDiagram& d);

// Bracket in A with loop value -A^2 - A^-2 and <long unknot> = 1. The
// A-smoothing of X(a,b,c,d) joins a-b and c-d. Computed by a sweep over the
// crossings that merges partial states with the same boundary connectivity.
// Throws ResourceError above crossing_cap.
LaurentPoly kauffman_bracket(const LongKnotDiagram& d, int crossing_cap = kDefaultCrossingCap);

// Same value by enumerating all 2^c smoothings. Reference implementation;
// `parallel` splits the state range across OpenMP threads.
LaurentPoly kauffman_bracket_exhaustive(const LongKnotDiagram& d, Execution exec = Execution::parallel);

// V(t) = (-A^3)^(-writhe) <d>, then A^-4 -> t.
LaurentPoly jones_from_bracket(const LaurentPoly& bracket, std::int64_t writhe);
LaurentPoly jones(const LongKnotDiagram& d, int crossing_cap = kDefaultCrossingCap);

// Signed count of sub-diagrams of the based Gauss diagram matching `pattern`,
// e.g. "U1 O2 O1 U2": the points of the arrow diagram in order along the long
// knot, each naming an arrow and whether the knot passes over or under there.
std::int64_t arrow_diagram_count(const LongKnotDiagram& d, std::string_view pattern);

// Degree-2 invariant (Casson), <U1 O2 O1 U2>; trefoil 1, figure-eight -1.
std::int64_t casson_v2(const LongKnotDiagram& d);
// Degree-3 invariant; right-handed trefoil +1, odd under mirror.
std::int64_t vassiliev_v3(const LongKnotDiagram& d);

struct Fingerprint {
  LaurentPoly jones;
  std::int64_t v2 = 0;
  std::int64_t v3 = 0;

  Fingerprint mirrored() const { return {jones.inverted(), v2, -v3}; }
  std::string to_string() const;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

// Simplifies first, so crossing_cap applies to the reduced diagram.
Fingerprint fingerprint(const LongKnotDiagram& d, int crossing_cap = kDefaultCrossingCap);
bool equal_up_to_mirror(const Fingerprint& a, const Fingerprint& b);

}  // namespace scknot
