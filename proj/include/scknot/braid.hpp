#pragma once

// Braid words over the Artin generators s_1 .. s_{n-1}, pure braids and the
// A_{i,j} generators, plus the Artin action on the free group.
//
// Conventions used throughout the library:
//   * a word is read left to right = top to bottom of the braid picture;
//   * in s_k the strand moving from position k+1 to k passes over, so with
//     all strands oriented downwards s_k is a positive crossing;
//   * A_{i,j} (i < j) = (s_{j-1} .. s_{i+1}) s_i^2 (s_{i+1}^-1 .. s_{j-1}^-1).

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "scknot/error.hpp"

namespace scknot {

struct Letter {
  int pos = 1;   // generator index k of s_k, 1-based
  int sign = 1;  // +1 or -1
  friend bool operator==(const Letter&, const Letter&) = default;
};

// Maximum number of letters any braid or free-group word may carry.
// Process-wide, default 100000.
std::size_t word_length_cap();
void set_word_length_cap(std::size_t cap);

class Permutation {
 public:
  explicit Permutation(int size = 1);
  explicit Permutation(std::vector<int> images);

  int size() const { return static_cast<int>(images_.size()); }
  // Final (bottom) position of the strand that starts at top position p.
  int operator()(int p) const { return images_.at(static_cast<std::size_t>(p - 1)); }
  const std::vector<int>& images() const { return images_; }
  Permutation inverse() const;
  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

class SigmaWord {
 public:
  SigmaWord() = default;
  explicit SigmaWord(int strands, std::vector<Letter> letters = {});

  int strands() const { return strands_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  SigmaWord inverse() const;
  // Concatenation; the result lives on max(strands) strands.
  SigmaWord operator*(const SigmaWord& rhs) const;
  SigmaWord with_strands(int strands) const;
  // Largest k with s_k in the word, 0 for the empty word.
  int max_position() const;

  // "s1 s2^-1 ..."; the empty word renders as "".
  std::string to_string() const;

  friend bool operator==(const SigmaWord&, const SigmaWord&) = default;

 private:
  int strands_ = 1;
  std::vector<Letter> letters_;
};

SigmaWord free_reduce(const SigmaWord& w);
Permutation permutation(const SigmaWord& w);

// Signed crossing count between the strands starting at top positions a and b.
int signed_crossings(const SigmaWord& w, int a, int b);

class PureBraid {
 public:
  PureBraid() = default;
  // Throws DomainError when w is not pure.
  explicit PureBraid(SigmaWord w);
  static PureBraid identity(int strands);

  const SigmaWord& word() const { return word_; }
  int strands() const { return word_.strands(); }
  std::size_t length() const { return word_.length(); }

  PureBraid inverse() const { return PureBraid(word_.inverse(), Trusted{}); }
  PureBraid operator*(const PureBraid& rhs) const { return PureBraid(word_ * rhs.word_, Trusted{}); }
  PureBraid reduced() const { return PureBraid(free_reduce(word_), Trusted{}); }
  std::string to_string() const { return word_.to_string(); }

  friend bool operator==(const PureBraid&, const PureBraid&) = default;

 private:
  struct Trusted {};
  PureBraid(SigmaWord w, Trusted) : word_(std::move(w)) {}
  friend PureBraid shift(const PureBraid&, int);
  friend PureBraid double_strand(const PureBraid&, int);

  SigmaWord word_;
};

struct AGenerator {
  int i = 1;
  int j = 2;
  int exponent = 1;

  // Normalizes i > j to (j, i); rejects i == j, i < 1 and exponent 0.
  AGenerator(int i, int j, int exponent = 1);
  std::string to_string() const;
  friend bool operator==(const AGenerator&, const AGenerator&) = default;
};

PureBraid expand_A_generator(const AGenerator& g, int strands);
PureBraid include(const PureBraid& b, int new_strands);
PureBraid shift(const PureBraid& b, int offset);
// i(b1) i'(b2): b1 on the first 2n+1 strands, b2 on the last 2m+1.
PureBraid tensor(const PureBraid& b1, const PureBraid& b2);
// a b a^-1 b^-1, freely reduced, on max(strands) strands.
PureBraid commutator(const PureBraid& a, const PureBraid& b);
// Cable the strand at (top) position i into two parallel strands.
PureBraid double_strand(const PureBraid& b, int i);
// Delete every crossing of the strand starting at position i and drop it.
SigmaWord erase_strand(const SigmaWord& w, int i);

// ---------------------------------------------------------------------------
// Free groups and the Artin action.

struct FreeLetter {
  int gen = 1;  // x_gen, 1-based
  int sign = 1;
  friend bool operator==(const FreeLetter&, const FreeLetter&) = default;
};

// Freely reduced word in x_1, x_2, ...
class FreeGroupWord {
 public:
  FreeGroupWord() = default;
  explicit FreeGroupWord(const std::vector<FreeLetter>& letters);
  static FreeGroupWord generator(int g, int sign = 1);

  const std::vector<FreeLetter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int max_generator() const;

  FreeGroupWord inverse() const;
  FreeGroupWord operator*(const FreeGroupWord& rhs) const;
  std::string to_string() const;

  friend bool operator==(const FreeGroupWord&, const FreeGroupWord&) = default;

 private:
  void push(FreeLetter l);
  std::vector<FreeLetter> letters_;
};

FreeGroupWord free_commutator(const FreeGroupWord& u, const FreeGroupWord& v);

// Endomorphism of F_k given by the images of x_1 .. x_k.
class FreeEndo {
 public:
  static FreeEndo identity(int rank);
  explicit FreeEndo(std::vector<FreeGroupWord> images);

  int rank() const { return static_cast<int>(images_.size()); }
  const FreeGroupWord& image(int g) const { return images_.at(static_cast<std::size_t>(g - 1)); }
  const std::vector<FreeGroupWord>& images() const { return images_; }
  FreeGroupWord apply(const FreeGroupWord& w) const;
  // (this o other)(x) = this(other(x))
  FreeEndo compose(const FreeEndo& other) const;

  friend bool operator==(const FreeEndo&, const FreeEndo&) = default;

 private:
  std::vector<FreeGroupWord> images_;
};

// Artin representation. s_k: x_k -> x_k x_{k+1} x_k^-1, x_{k+1} -> x_k, and
// artin_action(u v) = artin_action(u) o artin_action(v).
FreeEndo artin_action(const SigmaWord& w);
inline FreeEndo artin_action(const PureBraid& b) { return artin_action(b.word()); }

}  // namespace scknot
