#include "scknot/random.hpp"

namespace scknot {

std::uint64_t case_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

int uniform_int(Rng& rng, int lo, int hi) {
  // modulo reduction keeps the stream identical across standard libraries
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(rng() % span);
}

AGenerator random_A_generator(Rng& rng, int strands) {
  const int i = uniform_int(rng, 1, strands - 1);
  const int j = uniform_int(rng, i + 1, strands);
  return AGenerator(i, j, uniform_int(rng, 0, 1) == 0 ? 1 : -1);
}

PureBraid random_pure_braid(Rng& rng, int strands, std::size_t max_letters) {
  PureBraid b = PureBraid::identity(strands);
  if (strands < 2) return b;
  // a handful of rejected draws ends the word
  for (int misses = 0; misses < 4;) {
    PureBraid g = expand_A_generator(random_A_generator(rng, strands), strands);
    if (b.length() + g.length() > max_letters) {
      ++misses;
      continue;
    }
    b = b * g;
    if (uniform_int(rng, 0, 5) == 0) break;
  }
  return b.reduced();
}

}  // namespace scknot
