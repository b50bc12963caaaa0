#pragma once

// Truncated Magnus expansion of free groups and the Johnson-type filtration
// of pure braids it detects through the Artin action.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "scknot/braid.hpp"

namespace scknot {

inline constexpr int kDefaultMagnusDegree = 5;

// Element of Z<<X_1..X_k>> modulo words of length > max_degree, stored
// densely by degree. Arithmetic wraps modulo 2^64; coefficients are exact
// while they stay below 2^63 in magnitude.
class TruncatedSeries {
 public:
  TruncatedSeries(int generators, int max_degree);  // zero series
  static TruncatedSeries one(int generators, int max_degree);
  // Image of x_g (1 + X_g) or x_g^-1 (1 - X_g + X_g^2 - ...).
  static TruncatedSeries of_letter(int generators, int max_degree, int g, int sign);

  int generators() const { return k_; }
  int max_degree() const { return max_degree_; }

  // Word given as 1-based symbol indices; the empty word is the constant term.
  std::int64_t coefficient(const std::vector<int>& word) const;
  void set_coefficient(const std::vector<int>& word, std::int64_t value);
  // Nonzero coefficients keyed by word.
  std::map<std::vector<int>, std::int64_t> terms() const;

  TruncatedSeries operator*(const TruncatedSeries& rhs) const;
  TruncatedSeries operator+(const TruncatedSeries& rhs) const;
  TruncatedSeries operator-(const TruncatedSeries& rhs) const;

  // Smallest d >= 1 such that (this - 1) has a nonzero term of degree d;
  // max_degree + 1 when there is none.
  int deviation_degree() const;
  bool is_one() const { return deviation_degree() > max_degree_ && constant() == 1; }
  std::int64_t constant() const { return static_cast<std::int64_t>(coeffs_[0]); }

  // "1 + X1X2 - X2X1", terms by degree then lexicographically.
  std::string to_string() const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::size_t index_of(const std::vector<int>& word) const;

  int k_;
  int max_degree_;
  std::vector<std::size_t> offset_;  // start of each degree block; offset_[d+1]-offset_[d] = k^d
  std::vector<std::uint64_t> coeffs_;
};

// x_g -> 1 + X_g. The symbol count is max(generators, largest generator in w, 1).
TruncatedSeries magnus_expand(const FreeGroupWord& w, int max_degree, int generators = 0);

// Magnus images of artin_action(w)(x_j), j = 1..strands, computed in the
// truncated algebra without expanding the free-group words.
std::vector<TruncatedSeries> magnus_artin_images(const SigmaWord& w, int max_degree);

// Largest n <= dmax such that artin_action(b)(x_j) x_j^-1 expands to
// 1 + (degree >= n+1) for every j. b in gamma_n P_k implies a value >= n.
int johnson_degree(const PureBraid& b, int dmax);
// Same quantity through artin_action and magnus_expand on explicit words.
// Subject to the word-length cap; meant for cross-checking small braids.
int johnson_degree_via_words(const PureBraid& b, int dmax);

}  // namespace scknot
