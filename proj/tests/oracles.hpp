#pragma once

// Reference computations for the tests. Nothing here calls into the library
// beyond reading plain values (strings, letter lists), so agreement with the
// library is evidence rather than tautology.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Poly = std::map<int, std::int64_t>;  // exponent -> coefficient, no zeros

// Kauffman bracket of a long knot from its PD text "X(a,b,c,d),...": all 2^c
// states, loops counted by union-find after joining the two open ends.
Poly bracket_from_pd(const std::string& pd);
// V(t) from the bracket and the writhe.
Poly jones_from_pd(const std::string& pd, int writhe);

// Second and third derivative combinations of V at t = 1:
//   v2 = -sum c e^2 / 6,  v3 = -sum c e^3 / 36.
std::int64_t v2_from_jones(const Poly& v);
std::int64_t v3_from_jones(const Poly& v);

// Signed crossing count between the strands starting at top positions a and b,
// tracked by hand from (position, sign) letters.
int crossings_between(const std::vector<std::pair<int, int>>& letters, int strands, int a, int b);
// Final position of each strand, 1-based.
std::vector<int> final_positions(const std::vector<std::pair<int, int>>& letters, int strands);

Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_invert(const Poly& a);  // t -> t^-1

// Independent seeded generator for property tests.
struct Gen {
  explicit Gen(std::uint64_t seed) : rng(seed) {}
  int in(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
  int odd(int lo, int hi) { return 2 * in((lo - 1) / 2, (hi - 1) / 2) + 1; }
  // Text of a random product of A-generators on `strands` strands.
  std::string a_word(int strands, int max_gens);
  std::mt19937_64 rng;
};

}  // namespace oracle
