#pragma once

// Seeded generators for randomized property checks. Every random object in
// the library is derived from an explicit 64-bit seed.

#include <cstddef>
#include <cstdint>
#include <random>

#include "scknot/braid.hpp"

namespace scknot {

using Rng = std::mt19937_64;

// Independent per-case seed (splitmix64 of seed and index).
std::uint64_t case_seed(std::uint64_t seed, std::uint64_t index);

int uniform_int(Rng& rng, int lo, int hi);  // inclusive

// A_{i,j}^{+-1} with 1 <= i < j <= strands.
AGenerator random_A_generator(Rng& rng, int strands);

// Product of random A-generators whose expansion has at most max_letters
// sigma letters; the identity when strands < 2.
PureBraid random_pure_braid(Rng& rng, int strands, std::size_t max_letters);

}  // namespace scknot
