#include "scknot/suites.hpp"

#include <algorithm>
#include <cstdio>

#include "scknot/closure.hpp"
#include "scknot/coset.hpp"
#include "scknot/lcs.hpp"
#include "scknot/magnus.hpp"
#include "scknot/random.hpp"

namespace scknot {

namespace {

int random_odd_strands(Rng& rng, int lo, int hi) { return 2 * uniform_int(rng, (lo - 1) / 2, (hi - 1) / 2) + 1; }

std::string hex(std::uint64_t v) {
  char buf[19];
  std::snprintf(buf, sizeof buf, "0x%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string describe(const PureBraid& b) { return "[" + std::to_string(b.strands()) + "] " + b.to_string(); }

CaseResult verdict(bool ok, std::string detail) { return {0, 0, ok, std::move(detail)}; }

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"stabilize", "tensor", "orbit", "lcs", "plat"};
  return names;
}

bool is_suite(std::string_view name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

CaseResult stabilize_case(std::uint64_t seed) {
  Rng rng(seed);
  const int strands = random_odd_strands(rng, 1, 7);
  const PureBraid b = random_pure_braid(rng, strands, 16);
  const Fingerprint before = fingerprint(short_circuit_close(b), kSuiteCrossingCap);
  const Fingerprint after = fingerprint(short_circuit_close(include(b, strands + 2)), kSuiteCrossingCap);
  return verdict(before == after, describe(b) + " | " + before.to_string() + " | stabilized " + after.to_string());
}

CaseResult tensor_case(std::uint64_t seed) {
  Rng rng(seed);
  const PureBraid b1 = random_pure_braid(rng, random_odd_strands(rng, 3, 5), 12);
  const PureBraid b2 = random_pure_braid(rng, random_odd_strands(rng, 3, 5), 12);
  const Fingerprint f1 = fingerprint(short_circuit_close(b1), kSuiteCrossingCap);
  const Fingerprint f2 = fingerprint(short_circuit_close(b2), kSuiteCrossingCap);
  const Fingerprint ft = fingerprint(short_circuit_close(tensor(b1, b2)), kSuiteCrossingCap);
  const Fingerprint fs =
      fingerprint(connect_sum(short_circuit_close(b1), short_circuit_close(b2)), kSuiteCrossingCap);
  const bool ok = ft == fs && ft.jones == f1.jones * f2.jones && ft.v2 == f1.v2 + f2.v2 && ft.v3 == f1.v3 + f2.v3;
  return verdict(ok, describe(b1) + " (x) " + describe(b2) + " | tensor " + ft.to_string() + " | sum " +
                         fs.to_string());
}

CaseResult orbit_case(std::uint64_t seed) {
  Rng rng(seed);
  const int strands = random_odd_strands(rng, 3, 9);
  const PureBraid b = random_pure_braid(rng, strands, 12);
  const Side side = uniform_int(rng, 0, 1) == 0 ? Side::top : Side::bottom;
  const auto gens = side == Side::top ? ht_generators(strands) : hb_generators(strands);
  const CosetGenerator& g = gens[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(gens.size()) - 1))];
  const int e = uniform_int(rng, 0, 1) == 0 ? 1 : -1;
  const PureBraid moved = apply_action(b, g, e);
  const Fingerprint before = fingerprint(short_circuit_close(b), kSuiteCrossingCap);
  const Fingerprint after = fingerprint(short_circuit_close(moved), kSuiteCrossingCap);
  return verdict(before == after, describe(b) + " | " + to_string(side) + " " + g.name() + "^" + std::to_string(e) +
                                      " | " + before.to_string() + " | after " + after.to_string());
}

CaseResult lcs_case(std::uint64_t seed, int n) {
  if (n != 3 && n != 4) throw DomainError("lcs cases exist for n = 3 and n = 4");
  Rng rng(seed);
  const int strands = random_odd_strands(rng, 3, n == 3 ? 7 : 5);
  const PureBraid b = sample_gamma(n, strands, rng());
  const CertificateReport cert = n_triviality_certificate(b, n);
  const int jd = johnson_degree(b, n);
  std::string detail = "gamma_" + std::to_string(n) + " " + describe(b);
  for (const auto& [name, value] : cert.invariants) detail += " | " + name + " " + std::to_string(value);
  detail += " | johnson " + std::to_string(jd);
  return verdict(cert.consistent && jd >= n, detail);
}

CaseResult plat_case(std::uint64_t seed) {
  Rng rng(seed);
  const int strands = random_odd_strands(rng, 3, 5);
  const PureBraid x = random_pure_braid(rng, strands, 10);
  const int n = (strands + 1) / 2;
  const SigmaWord w = t_braid(n) * include(x, 2 * n).word();
  const Fingerprint plat = fingerprint(plat_close(w, PlatPairing::standard(2 * n)), kSuiteCrossingCap);
  const Fingerprint closed = fingerprint(short_circuit_close(x), kSuiteCrossingCap);
  return verdict(equal_up_to_mirror(plat, closed),
                 describe(x) + " | plat " + plat.to_string() + " | closure " + closed.to_string());
}

CaseResult run_case(std::string_view suite, std::uint64_t seed, std::size_t index) {
  if (!is_suite(suite)) throw DomainError("unknown suite '" + std::string(suite) + "'");
  const std::uint64_t s = case_seed(seed, index);
  CaseResult r;
  try {
    if (suite == "stabilize") r = stabilize_case(s);
    else if (suite == "tensor") r = tensor_case(s);
    else if (suite == "orbit") r = orbit_case(s);
    else if (suite == "lcs") r = lcs_case(s, 3 + static_cast<int>(index % 2));
    else r = plat_case(s);
  } catch (const Error& e) {
    r = {0, 0, false, std::string("error: ") + e.what()};
  }
  r.index = index;
  r.seed = s;
  return r;
}

SuiteReport run_suite(std::string_view suite, std::uint64_t seed, std::size_t count, Execution exec) {
  if (!is_suite(suite)) throw DomainError("unknown suite '" + std::string(suite) + "'");
  SuiteReport report;
  report.suite = std::string(suite);
  report.seed = seed;
  report.count = count;
  report.cases.resize(count);
  const auto n = static_cast<long long>(count);
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long long k = 0; k < n; ++k) {
      report.cases[static_cast<std::size_t>(k)] = run_case(suite, seed, static_cast<std::size_t>(k));
    }
  } else {
    for (long long k = 0; k < n; ++k) {
      report.cases[static_cast<std::size_t>(k)] = run_case(suite, seed, static_cast<std::size_t>(k));
    }
  }
  return report;
}

std::size_t SuiteReport::passed() const {
  return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) { return c.passed; }));
}

std::string SuiteReport::to_text() const {
  std::string out = "suite " + suite + " seed " + std::to_string(seed) + " count " + std::to_string(count) + "\n";
  for (const CaseResult& c : cases) {
    if (c.passed) continue;
    out += "FAIL case " + std::to_string(c.index) + " seed " + hex(c.seed) + ": " + c.detail + "\n";
  }
  out += "passed " + std::to_string(passed()) + "/" + std::to_string(count) + "\n";
  return out;
}

}  // namespace scknot
