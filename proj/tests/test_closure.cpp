#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "scknot/braid_text.hpp"
#include "scknot/closure.hpp"
#include "scknot/invariants.hpp"

using namespace scknot;

namespace {

PureBraid P(const std::string& text, int strands) { return PureBraid(parse_braid_word(text, strands).word); }
PureBraid A(int i, int j, int strands, int e = 1) { return expand_A_generator(AGenerator(i, j, e), strands); }

oracle::Poly jones_oracle(const LongKnotDiagram& d) {
  int w = 0;
  for (const Crossing& c : d.crossings()) w += c.sign;
  return oracle::jones_from_pd(d.pd_code(), w);
}

void check_well_formed(const LongKnotDiagram& d) {
  std::map<int, std::pair<int, int>> seen;  // id -> (overs, unders)
  std::map<int, std::set<int>> signs;
  for (const GaussEntry& e : d.gauss()) {
    (e.over ? seen[e.crossing].first : seen[e.crossing].second)++;
    signs[e.crossing].insert(e.sign);
  }
  CHECK(static_cast<int>(seen.size()) == d.crossing_count());
  for (const auto& [id, c] : seen) {
    CHECK(c.first == 1);
    CHECK(c.second == 1);
    CHECK(signs[id].size() == 1);
  }
  // edge labels form one open path 0..2c
  std::map<int, int> uses;
  for (const Crossing& c : d.crossings())
    for (int e : c.pd) ++uses[e];
  for (const auto& [e, n] : uses) CHECK(n == ((e == 0 || e == 2 * d.crossing_count()) ? 1 : 2));
}

const oracle::Poly kTrefoil = {{1, 1}, {3, 1}, {4, -1}};

}  // namespace

TEST_CASE("short-circuit closure of trivial braids") {
  CHECK(short_circuit_close(PureBraid::identity(1)).crossing_count() == 0);
  for (int n = 0; n <= 4; ++n) {
    const LongKnotDiagram d = short_circuit_close(PureBraid::identity(2 * n + 1));
    CHECK(d.crossing_count() == 0);
    CHECK(d.gauss_code().empty());
    CHECK(d.arc_count() == 1);
  }
  CHECK_THROWS_AS(short_circuit_close(PureBraid::identity(4)), DomainError);
}

TEST_CASE("short-circuit closure of A(1,2)") {
  const LongKnotDiagram d = short_circuit_close(A(1, 2, 3));
  CHECK(d.crossing_count() == 2);
  CHECK(d.gauss_code() == "U1- O2- U2- O1-");
  CHECK(simplify(d).crossing_count() == 0);
  CHECK(jones(d) == LaurentPoly::constant(1));
  CHECK(jones_oracle(d) == oracle::Poly{{0, 1}});
}

TEST_CASE("short-circuit closure: one crossing per letter, well formed") {
  oracle::Gen gen(21);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = gen.odd(3, 7);
    const PureBraid b = P(gen.a_word(n, 4), n);
    const LongKnotDiagram d = short_circuit_close(b);
    CHECK(static_cast<std::size_t>(d.crossing_count()) == b.length());
    check_well_formed(d);
    CHECK(LongKnotDiagram::parse_gauss(d.gauss_code()) == d);
    CHECK(LongKnotDiagram::parse_pd(d.pd_code()) == d);
  }
}

TEST_CASE("closure of A(1,3) is a trefoil") {
  const LongKnotDiagram d = short_circuit_close(A(1, 3, 3));
  CHECK(d.crossing_count() == 4);
  CHECK(jones_oracle(d) == kTrefoil);
  CHECK(jones(d).terms() == kTrefoil);
}

TEST_CASE("stabilization invariance") {
  oracle::Gen gen(22);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = gen.odd(3, 7);
    const PureBraid b = P(gen.a_word(n, 3), n);
    const LongKnotDiagram base = simplify(short_circuit_close(b));
    for (int extra : {2, 4}) {
      const LongKnotDiagram d = short_circuit_close(include(b, n + extra));
      CHECK(fingerprint(d) == fingerprint(short_circuit_close(b)));
      if (base.crossing_count() <= 16) CHECK(jones_oracle(simplify(d)) == jones_oracle(base));
    }
  }
}

TEST_CASE("plat closure examples") {
  const PlatPairing std2 = PlatPairing::standard(2);
  CHECK(plat_close(SigmaWord(2), std2).crossing_count() == 0);
  const LongKnotDiagram kink = plat_close(SigmaWord(2, {{1, 1}}), std2);
  CHECK(kink.crossing_count() == 1);
  CHECK(simplify(kink).crossing_count() == 0);
  CHECK(jones(plat_close(SigmaWord(2, {{1, 1}, {1, 1}}), std2)) == LaurentPoly::constant(1));
}

TEST_CASE("plat closure errors") {
  try {
    plat_close(SigmaWord(4), PlatPairing::standard(4));
    FAIL("two components accepted");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find('2') != std::string::npos);
  }
  CHECK(plat_component_count(SigmaWord(4), PlatPairing::standard(4)) == 2);
  CHECK(plat_component_count(t_braid(2), PlatPairing::standard(4)) == 1);
  CHECK_THROWS_AS(plat_close(SigmaWord(3), PlatPairing::standard(3)), DomainError);

  PlatPairing crossing = PlatPairing::standard(4);
  crossing.top = {{1, 3}, {2, 4}};
  CHECK_THROWS_AS(plat_close(t_braid(2), crossing), DomainError);
  PlatPairing partial = PlatPairing::standard(4);
  partial.bottom = {{1, 2}};
  CHECK_THROWS_AS(plat_close(t_braid(2), partial), DomainError);
}

TEST_CASE("plat closure with nested pairings") {
  PlatPairing nested;
  nested.top = {{1, 4}, {2, 3}};
  nested.bottom = {{1, 2}, {3, 4}};
  const LongKnotDiagram d = plat_close(SigmaWord(4), nested);
  CHECK(d.crossing_count() == 0);
  nested.bottom = {{1, 4}, {2, 3}};
  CHECK_THROWS_AS(plat_close(SigmaWord(4), nested), DomainError);
}

TEST_CASE("t_braid matches the frozen fixture") {
  std::ifstream in(std::string(SCKNOT_FIXTURES) + "/t_braid.txt");
  REQUIRE(in);
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    int n = 0;
    ls >> n;
    std::string rest;
    std::getline(ls, rest);
    rest.erase(0, rest.find_first_not_of(' '));
    CHECK(t_braid(n).to_string() == rest);
    CHECK(t_braid(n).strands() == 2 * n);
    ++rows;
  }
  CHECK(rows >= 3);
  CHECK_THROWS_AS(t_braid(0), DomainError);
}

TEST_CASE("t_braid plat relation") {
  CHECK(simplify(plat_close(t_braid(1), PlatPairing::standard(2))).crossing_count() == 0);
  const PureBraid a = A(1, 2, 3);
  const LaurentPoly vp = jones(plat_close(t_braid(2) * include(a, 4).word(), PlatPairing::standard(4)));
  const LaurentPoly vs = jones(short_circuit_close(a));
  CHECK((vp == vs || vp == vs.inverted()));

  oracle::Gen gen(23);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = trial < 20 ? 3 : 5;
    const PureBraid x = P(gen.a_word(n, 3), n);
    if (x.length() > 10 && n == 3) continue;
    const int k = (n + 1) / 2;
    const LongKnotDiagram plat = plat_close(t_braid(k) * include(x, 2 * k).word(), PlatPairing::standard(2 * k));
    const LongKnotDiagram closed = short_circuit_close(x);
    check_well_formed(plat);
    CHECK(equal_up_to_mirror(fingerprint(plat), fingerprint(closed)));
    if (simplify(plat).crossing_count() <= 16 && simplify(closed).crossing_count() <= 16) {
      const oracle::Poly vp2 = jones_oracle(simplify(plat)), vs2 = jones_oracle(simplify(closed));
      CHECK((vp2 == vs2 || vp2 == oracle::poly_invert(vs2)));
    }
  }
}

TEST_CASE("connected sum") {
  const LongKnotDiagram t = short_circuit_close(A(1, 3, 3));
  const LongKnotDiagram u;
  CHECK(connect_sum(u, t).gauss() == t.gauss());
  CHECK(connect_sum(t, u).gauss() == t.gauss());
  const LongKnotDiagram tt = connect_sum(t, t);
  CHECK(tt.crossing_count() == 8);
  check_well_formed(tt);
  CHECK(jones(tt).terms() == oracle::poly_mul(kTrefoil, kTrefoil));
  CHECK(jones_oracle(tt) == oracle::poly_mul(kTrefoil, kTrefoil));
}

TEST_CASE("tensor product closes to the connected sum") {
  oracle::Gen gen(24);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = gen.odd(3, 5), m = gen.odd(3, 5);
    const PureBraid b1 = P(gen.a_word(n, 3), n), b2 = P(gen.a_word(m, 3), m);
    const LongKnotDiagram dt = short_circuit_close(tensor(b1, b2));
    const LongKnotDiagram d1 = short_circuit_close(b1), d2 = short_circuit_close(b2);
    if (simplify(dt).crossing_count() <= 16) {
      CHECK(jones_oracle(simplify(dt)) == oracle::poly_mul(jones_oracle(simplify(d1)), jones_oracle(simplify(d2))));
    }
    const Fingerprint f = fingerprint(dt), f1 = fingerprint(d1), f2 = fingerprint(d2);
    CHECK(f.v2 == f1.v2 + f2.v2);
    CHECK(f.v3 == f1.v3 + f2.v3);
    CHECK(f == fingerprint(connect_sum(d1, d2)));
  }
}

TEST_CASE("simplify") {
  const LongKnotDiagram kink = LongKnotDiagram::parse_gauss("O1+ U1+");
  CHECK(simplify(kink).crossing_count() == 0);
  const LongKnotDiagram empty;
  CHECK(simplify(empty) == empty);
  CHECK(simplify(short_circuit_close(A(1, 2, 3))).crossing_count() == 0);
  // unreduced b b^-1 closes to a removable tangle
  const PureBraid b = A(1, 3, 5) * A(2, 5, 5, -1);
  const PureBraid bb(b.word() * b.word().inverse());
  CHECK(simplify(short_circuit_close(bb)).crossing_count() == 0);
  // trefoil stays
  const LongKnotDiagram t = LongKnotDiagram::parse_gauss("O1+ U2+ O3+ U1+ O2+ U3+");
  CHECK(simplify(t).crossing_count() == 3);
}

TEST_CASE("simplify preserves the knot") {
  oracle::Gen gen(25);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = gen.odd(3, 7);
    const LongKnotDiagram d = short_circuit_close(P(gen.a_word(n, 3), n));
    const LongKnotDiagram s = simplify(d);
    CHECK(s.crossing_count() <= d.crossing_count());
    check_well_formed(s);
    if (d.crossing_count() <= 16) CHECK(jones_oracle(s) == jones_oracle(d));
    CHECK(casson_v2(s) == casson_v2(d));
    CHECK(vassiliev_v3(s) == vassiliev_v3(d));
  }
}

TEST_CASE("mirror") {
  const LongKnotDiagram u;
  CHECK(mirror(u) == u);
  const LongKnotDiagram t = short_circuit_close(A(1, 3, 3));
  CHECK(mirror(mirror(t)) == t);
  CHECK(jones(mirror(t)) == jones(t).inverted());
  CHECK(jones_oracle(mirror(t)) == oracle::poly_invert(kTrefoil));
}

TEST_CASE("bridge upper bound") {
  CHECK(bridge_upper_bound(PureBraid::identity(1)) == 1);
  CHECK(bridge_upper_bound(PureBraid::identity(7)) == 1);
  CHECK(bridge_upper_bound(A(1, 3, 3)) == 2);
  CHECK(bridge_upper_bound(A(1, 2, 3)) == 2);
  CHECK(bridge_upper_bound(include(A(1, 3, 3), 7)) == 2);
  CHECK(bridge_upper_bound(A(3, 5, 5)) == 3);
  CHECK(bridge_upper_bound(A(1, 5, 7)) == 3);
  CHECK(bridge_upper_bound(A(2, 6, 7)) == 4);
}
