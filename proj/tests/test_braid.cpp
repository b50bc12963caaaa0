#include <doctest.h>

#include "oracles.hpp"
#include "scknot/braid.hpp"
#include "scknot/braid_text.hpp"

using namespace scknot;

namespace {

std::vector<std::pair<int, int>> raw(const SigmaWord& w) {
  std::vector<std::pair<int, int>> out;
  for (const Letter& l : w.letters()) out.emplace_back(l.pos, l.sign);
  return out;
}

SigmaWord word(const char* text, int strands) { return parse_braid_word(text, strands).word; }
PureBraid A(int i, int j, int strands, int e = 1) { return expand_A_generator(AGenerator(i, j, e), strands); }

FreeGroupWord fw(std::initializer_list<int> signed_gens) {
  std::vector<FreeLetter> ls;
  for (int g : signed_gens) ls.push_back({g > 0 ? g : -g, g > 0 ? 1 : -1});
  return FreeGroupWord(ls);
}

}  // namespace

TEST_CASE("A-generator expansion") {
  CHECK(A(1, 2, 3).to_string() == "s1 s1");
  CHECK(A(1, 3, 3).to_string() == "s2 s1 s1 s2^-1");
  CHECK(A(2, 3, 5, -1).to_string() == "s2^-1 s2^-1");
  CHECK(A(2, 3, 5, -1).strands() == 5);
  CHECK(A(3, 1, 3) == A(1, 3, 3));
  CHECK_THROWS_AS(A(1, 4, 3), DomainError);
  CHECK_THROWS_AS(AGenerator(2, 2), DomainError);
  CHECK_THROWS_AS(AGenerator(1, 2, 0), DomainError);
}

TEST_CASE("A-generator linking numbers") {
  for (int n = 2; n <= 7; ++n) {
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        for (int e : {-2, -1, 1, 3}) {
          const PureBraid b = A(i, j, n, e);
          const auto letters = raw(b.word());
          for (int a = 1; a <= n; ++a) {
            for (int c = a + 1; c <= n; ++c) {
              const int lk2 = oracle::crossings_between(letters, n, a, c);
              CHECK(lk2 == ((a == i && c == j) ? 2 * e : 0));
              CHECK(signed_crossings(b.word(), a, c) == lk2);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("free_reduce") {
  CHECK(free_reduce(word("s1 s1^-1", 2)).empty());
  CHECK(free_reduce(SigmaWord(3)).empty());
  CHECK(free_reduce(word("s1 s2 s2^-1 s1", 3)).to_string() == "s1 s1");
  CHECK(free_reduce(word("s1 s2 s1^-1 s2^-1", 3)).length() == 4);
}

TEST_CASE("permutation") {
  CHECK(permutation(SigmaWord(3)).is_identity());
  const Permutation p = permutation(word("s1", 3));
  CHECK(p.images() == std::vector<int>{2, 1, 3});
  // strand from top position 1 ends at 3, 2 at 1, 3 at 2
  const Permutation q = permutation(word("s1 s2", 3));
  CHECK(q.images() == std::vector<int>{3, 1, 2});
  CHECK(q.images() == oracle::final_positions(raw(word("s1 s2", 3)), 3));
  CHECK(q.inverse().images() == std::vector<int>{2, 3, 1});
}

TEST_CASE("purity is enforced") {
  CHECK_THROWS_WITH_AS(PureBraid(word("s1", 3)), "braid is not pure", DomainError);
  CHECK_NOTHROW(PureBraid(word("s1 s2 s1 s2^-1 s1^-1 s2^-1", 3)));
}

TEST_CASE("include and shift") {
  const PureBraid a = A(1, 2, 3);
  CHECK(include(a, 5).to_string() == "s1 s1");
  CHECK(include(a, 5).strands() == 5);
  CHECK(include(PureBraid::identity(1), 7) == PureBraid::identity(7));
  CHECK(include(include(a, 5), 9) == include(a, 9));
  CHECK_THROWS_AS(include(a, 2), DomainError);

  const PureBraid s = shift(a, 2);
  CHECK(s.to_string() == "s3 s3");
  CHECK(s.strands() == 5);
  CHECK(shift(a, 0) == a);
  CHECK(shift(PureBraid::identity(3), 4) == PureBraid::identity(7));
  CHECK_THROWS_AS(shift(a, -1), DomainError);
}

TEST_CASE("tensor") {
  const PureBraid a = A(1, 2, 3);
  const PureBraid t = tensor(a, a);
  CHECK(t.strands() == 5);
  CHECK(t == A(1, 2, 5) * A(3, 4, 5));
  const PureBraid b = A(1, 3, 5) * A(2, 4, 5, -1);
  CHECK(tensor(PureBraid::identity(3), b) == shift(b, 2));
  CHECK(tensor(PureBraid::identity(1), b) == b);
  CHECK(tensor(b, PureBraid::identity(3)) == include(b, 7));
  CHECK_THROWS_AS(tensor(A(1, 2, 2), a), DomainError);
}

TEST_CASE("commutator") {
  const PureBraid x = A(1, 3, 3) * A(1, 2, 3, -1);
  CHECK(commutator(x, x).word().empty());
  CHECK(commutator(x, PureBraid::identity(3)).word().empty());
  const PureBraid c = commutator(A(1, 2, 3), A(1, 3, 3));
  CHECK(c.to_string() == "s1 s1 s2 s1 s1 s2^-1 s1^-1 s1^-1 s2 s1^-1 s1^-1 s2^-1");
  CHECK(c.length() <= 16);
}

TEST_CASE("Artin action") {
  const FreeEndo id = artin_action(PureBraid::identity(4));
  for (int j = 1; j <= 4; ++j) CHECK(id.image(j) == FreeGroupWord::generator(j));

  const FreeEndo a12 = artin_action(A(1, 2, 2));
  const FreeGroupWord c = fw({1, 2});
  CHECK(a12.image(1) == c * fw({1}) * c.inverse());
  CHECK(a12.image(2) == c * fw({2}) * c.inverse());
  CHECK(a12.image(1).to_string() == "x1 x2 x1 x2^-1 x1^-1");
  CHECK(a12.image(2).to_string() == "x1 x2 x1^-1");

  const FreeEndo s1 = artin_action(word("s1", 2));
  CHECK(s1.image(1).to_string() == "x1 x2 x1^-1");
  CHECK(s1.image(2).to_string() == "x1");
  CHECK(artin_action(word("s1 s1^-1", 2)) == FreeEndo::identity(2));
}

TEST_CASE("Artin action is a homomorphism") {
  oracle::Gen gen(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = gen.in(2, 5);
    std::vector<Letter> u, v;
    for (int k = gen.in(0, 6); k > 0; --k) u.push_back({gen.in(1, n - 1), gen.in(0, 1) ? 1 : -1});
    for (int k = gen.in(0, 6); k > 0; --k) v.push_back({gen.in(1, n - 1), gen.in(0, 1) ? 1 : -1});
    const SigmaWord wu(n, u), wv(n, v);
    CHECK(artin_action(wu * wv) == artin_action(wu).compose(artin_action(wv)));
  }
}

TEST_CASE("Artin action fixes the boundary word and conjugates generators") {
  oracle::Gen gen(12);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = gen.in(2, 6);
    std::vector<Letter> ls;
    for (int k = gen.in(0, 10); k > 0; --k) ls.push_back({gen.in(1, n - 1), gen.in(0, 1) ? 1 : -1});
    const SigmaWord w(n, ls);
    const FreeEndo phi = artin_action(w);
    FreeGroupWord boundary;
    for (int j = 1; j <= n; ++j) boundary = boundary * FreeGroupWord::generator(j);
    CHECK(phi.apply(boundary) == boundary);
    // pure braids send x_j to a conjugate of x_j: exponent sums match
    if (permutation(w).is_identity()) {
      for (int j = 1; j <= n; ++j) {
        int sum = 0;
        for (const FreeLetter& l : phi.image(j).letters()) sum += l.gen == j ? l.sign : 0;
        CHECK(sum == 1);
      }
    }
  }
}

TEST_CASE("double_strand") {
  CHECK(double_strand(PureBraid::identity(4), 2) == PureBraid::identity(5));
  const PureBraid d = double_strand(A(1, 2, 2), 1);
  CHECK(d.strands() == 3);
  CHECK(d.length() == 4);
  CHECK(d.to_string() == "s2 s1 s1 s2");
  const auto letters = raw(d.word());
  CHECK(oracle::crossings_between(letters, 3, 1, 3) == 2);
  CHECK(oracle::crossings_between(letters, 3, 2, 3) == 2);
  CHECK(oracle::crossings_between(letters, 3, 1, 2) == 0);
  CHECK_THROWS_AS(double_strand(A(1, 2, 2), 3), DomainError);
}

TEST_CASE("doubled generators link both daughters with j") {
  for (int k = 2; k <= 6; ++k) {
    for (int i = 1; i <= k; ++i) {
      for (int j = 1; j <= k; ++j) {
        if (j == i) continue;
        const PureBraid d = double_strand(A(i, j, k), i);
        const int jj = j < i ? j : j + 1;
        const auto letters = raw(d.word());
        CHECK(permutation(d.word()).is_identity());
        for (int a = 1; a <= k + 1; ++a) {
          for (int b = a + 1; b <= k + 1; ++b) {
            const bool linked = (a == i || a == i + 1 || b == i || b == i + 1) && (a == jj || b == jj);
            CHECK(oracle::crossings_between(letters, k + 1, a, b) == (linked ? 2 : 0));
          }
        }
      }
    }
  }
}

TEST_CASE("double_strand then erase either daughter recovers the braid") {
  oracle::Gen gen(13);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = gen.in(2, 6);
    const PureBraid b = PureBraid(parse_braid_word(gen.a_word(n, 4), n).word);
    const int i = gen.in(1, n);
    const PureBraid d = double_strand(b, i);
    CHECK(permutation(d.word()).is_identity());
    CHECK(free_reduce(erase_strand(d.word(), i)) == free_reduce(b.word()));
    CHECK(free_reduce(erase_strand(d.word(), i + 1)) == free_reduce(b.word()));
  }
}

TEST_CASE("braid properties on random words") {
  oracle::Gen gen(14);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = gen.odd(1, 7), m = gen.odd(1, 7);
    const PureBraid b1 = n == 1 ? PureBraid::identity(1) : PureBraid(parse_braid_word(gen.a_word(n, 5), n).word);
    const PureBraid b2 = m == 1 ? PureBraid::identity(1) : PureBraid(parse_braid_word(gen.a_word(m, 5), m).word);

    const SigmaWord r = free_reduce(b1.word());
    CHECK(free_reduce(r) == r);
    CHECK(permutation(r) == permutation(b1.word()));

    const PureBraid t = tensor(b1, b2);
    CHECK(oracle::final_positions(raw(t.word()), t.strands()) == permutation(t.word()).images());
    CHECK(permutation(t.word()).is_identity());

    const int extra = gen.in(0, 4), off = gen.in(0, 4);
    CHECK(shift(include(b1, n + extra), off) == include(shift(b1, off), n + extra + off));
  }
}

TEST_CASE("braid word text grammar") {
  const ParsedWord p = parse_braid_word("s1 s2^-1  A(1,3)^-2 A(3,1)");
  CHECK(p.inferred_strands);
  CHECK(p.word.strands() == 3);
  CHECK(p.word.length() == 2 + 8 + 4);
  CHECK(parse_braid_word("A(1,2)").word.strands() == 2);
  CHECK(parse_braid_word("s4").word.strands() == 5);
  CHECK(parse_braid_word("").word.strands() == 1);
  CHECK_FALSE(parse_braid_word("s1", 4).inferred_strands);
  CHECK(parse_braid_word("A(1,2)^2", 3).word.to_string() == "s1 s1 s1 s1");

  CHECK_THROWS_AS(parse_braid_word("s1 t2"), ParseError);
  CHECK_THROWS_AS(parse_braid_word("s0"), ParseError);
  CHECK_THROWS_AS(parse_braid_word("s1^2"), ParseError);
  CHECK_THROWS_AS(parse_braid_word("A(1,2"), ParseError);
  CHECK_THROWS_AS(parse_braid_word("s3", 3), DomainError);
  try {
    parse_braid_word("s1 s2 bogus");
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(e.position() == 6);
  }
}

TEST_CASE("word length cap") {
  const std::size_t saved = word_length_cap();
  set_word_length_cap(8);
  CHECK_THROWS_AS(parse_braid_word("A(1,3) A(1,3) A(1,3)"), ResourceError);
  set_word_length_cap(saved);
  CHECK_NOTHROW(parse_braid_word("A(1,3) A(1,3) A(1,3)"));
}
