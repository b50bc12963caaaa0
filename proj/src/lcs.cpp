#include "scknot/lcs.hpp"

#include "scknot/closure.hpp"
#include "scknot/invariants.hpp"
#include "scknot/random.hpp"

namespace scknot {

PureBraid sample_gamma(int n, int strands, std::uint64_t seed) {
  if (n < 1) throw DomainError("lower central series index must be >= 1");
  if (strands < 3 || strands % 2 == 0) throw DomainError("sampling needs an odd strand count >= 3");
  Rng rng(seed);
  PureBraid b = expand_A_generator(random_A_generator(rng, strands), strands);
  for (int k = 2; k <= n; ++k) b = commutator(b, expand_A_generator(random_A_generator(rng, strands), strands));
  return b;
}

CertificateReport n_triviality_certificate(const PureBraid& b, int n) {
  if (n < 2 || n > 4) {
    throw DomainError("n-triviality certificates are implemented for n in {2,3,4}, got " + std::to_string(n));
  }
  CertificateReport r;
  r.braid = b;
  r.n = n;
  const PureBraid odd = b.strands() % 2 == 1 ? b : include(b, b.strands() + 1);
  const LongKnotDiagram d = simplify(short_circuit_close(odd));
  if (n >= 3) r.invariants.emplace_back("v2", casson_v2(d));
  if (n >= 4) r.invariants.emplace_back("v3", vassiliev_v3(d));
  for (const auto& [name, value] : r.invariants) r.consistent = r.consistent && value == 0;
  return r;
}

std::string CertificateReport::to_text() const {
  std::string out = "braid: " + braid.to_string() + "\n";
  out += "n: " + std::to_string(n) + "\n";
  for (const auto& [name, value] : invariants) out += name + ": " + std::to_string(value) + "\n";
  out += std::string("verdict: ") + (consistent ? "consistent with " : "NOT consistent with ") +
         std::to_string(n) + "-trivial\n";
  return out;
}

}  // namespace scknot
