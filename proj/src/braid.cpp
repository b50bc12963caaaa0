#include "scknot/braid.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <sstream>

namespace scknot {

namespace {

std::atomic<std::size_t> g_word_length_cap{100000};

void check_length(std::size_t n) {
  if (n > g_word_length_cap.load(std::memory_order_relaxed)) {
    throw ResourceError("word length " + std::to_string(n) + " exceeds cap " +
                        std::to_string(g_word_length_cap.load()));
  }
}

}  // namespace

std::size_t word_length_cap() { return g_word_length_cap.load(std::memory_order_relaxed); }
void set_word_length_cap(std::size_t cap) { g_word_length_cap.store(cap, std::memory_order_relaxed); }

// --- Permutation -------------------------------------------------------------

Permutation::Permutation(int size) : images_(static_cast<std::size_t>(std::max(size, 0))) {
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > size() || seen[static_cast<std::size_t>(v)]) {
      throw DomainError("not a permutation");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t p = 0; p < images_.size(); ++p) inv[static_cast<std::size_t>(images_[p] - 1)] = static_cast<int>(p) + 1;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (std::size_t p = 0; p < images_.size(); ++p) {
    if (images_[p] != static_cast<int>(p) + 1) return false;
  }
  return true;
}

// --- SigmaWord ---------------------------------------------------------------

SigmaWord::SigmaWord(int strands, std::vector<Letter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) throw DomainError("strand count must be positive");
  check_length(letters_.size());
  for (const Letter& l : letters_) {
    if (l.pos < 1 || l.pos >= strands_) {
      throw DomainError("letter s" + std::to_string(l.pos) + " out of range for " +
                        std::to_string(strands_) + " strands");
    }
    if (l.sign != 1 && l.sign != -1) throw DomainError("letter sign must be +1 or -1");
  }
}

SigmaWord SigmaWord::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back({it->pos, -it->sign});
  return SigmaWord(strands_, std::move(out));
}

SigmaWord SigmaWord::operator*(const SigmaWord& rhs) const {
  std::vector<Letter> out;
  out.reserve(letters_.size() + rhs.letters_.size());
  out.insert(out.end(), letters_.begin(), letters_.end());
  out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
  return SigmaWord(std::max(strands_, rhs.strands_), std::move(out));
}

SigmaWord SigmaWord::with_strands(int strands) const { return SigmaWord(strands, letters_); }

int SigmaWord::max_position() const {
  int m = 0;
  for (const Letter& l : letters_) m = std::max(m, l.pos);
  return m;
}

std::string SigmaWord::to_string() const {
  std::string out;
  for (const Letter& l : letters_) {
    if (!out.empty()) out += ' ';
    out += 's' + std::to_string(l.pos);
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

SigmaWord free_reduce(const SigmaWord& w) {
  std::vector<Letter> out;
  out.reserve(w.length());
  for (const Letter& l : w.letters()) {
    if (!out.empty() && out.back().pos == l.pos && out.back().sign == -l.sign) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return SigmaWord(w.strands(), std::move(out));
}

Permutation permutation(const SigmaWord& w) {
  // at[p] = strand (named by its top position) currently at position p
  std::vector<int> at(static_cast<std::size_t>(w.strands()));
  std::iota(at.begin(), at.end(), 1);
  for (const Letter& l : w.letters()) std::swap(at[static_cast<std::size_t>(l.pos - 1)], at[static_cast<std::size_t>(l.pos)]);
  std::vector<int> images(at.size());
  for (std::size_t p = 0; p < at.size(); ++p) images[static_cast<std::size_t>(at[p] - 1)] = static_cast<int>(p) + 1;
  return Permutation(std::move(images));
}

int signed_crossings(const SigmaWord& w, int a, int b) {
  std::vector<int> at(static_cast<std::size_t>(w.strands()));
  std::iota(at.begin(), at.end(), 1);
  int total = 0;
  for (const Letter& l : w.letters()) {
    auto& left = at[static_cast<std::size_t>(l.pos - 1)];
    auto& right = at[static_cast<std::size_t>(l.pos)];
    if ((left == a && right == b) || (left == b && right == a)) total += l.sign;
    std::swap(left, right);
  }
  return total;
}

// --- PureBraid -----------------------------------------------------------------

PureBraid::PureBraid(SigmaWord w) : word_(std::move(w)) {
  if (!permutation(word_).is_identity()) throw DomainError("braid is not pure");
}

PureBraid PureBraid::identity(int strands) { return PureBraid(SigmaWord(strands), Trusted{}); }

AGenerator::AGenerator(int a, int b, int e) : i(std::min(a, b)), j(std::max(a, b)), exponent(e) {
  if (a == b) throw DomainError("A-generator needs two distinct strands");
  if (i < 1) throw DomainError("A-generator strand indices are 1-based");
  if (e == 0) throw DomainError("A-generator exponent must be nonzero");
}

std::string AGenerator::to_string() const {
  std::string s = "A(" + std::to_string(i) + "," + std::to_string(j) + ")";
  if (exponent != 1) s += "^" + std::to_string(exponent);
  return s;
}

PureBraid expand_A_generator(const AGenerator& g, int strands) {
  if (g.j > strands) {
    throw DomainError("A(" + std::to_string(g.i) + "," + std::to_string(g.j) +
                      ") out of range for " + std::to_string(strands) + " strands");
  }
  std::vector<Letter> once;
  for (int k = g.j - 1; k > g.i; --k) once.push_back({k, 1});
  once.push_back({g.i, 1});
  once.push_back({g.i, 1});
  for (int k = g.i + 1; k < g.j; ++k) once.push_back({k, -1});
  SigmaWord unit(strands, std::move(once));
  if (g.exponent < 0) unit = unit.inverse();
  std::vector<Letter> out;
  const int reps = g.exponent < 0 ? -g.exponent : g.exponent;
  check_length(unit.length() * static_cast<std::size_t>(reps));
  for (int r = 0; r < reps; ++r) out.insert(out.end(), unit.letters().begin(), unit.letters().end());
  return PureBraid(SigmaWord(strands, std::move(out)));
}

PureBraid include(const PureBraid& b, int new_strands) {
  if (new_strands < b.strands()) {
    throw DomainError("cannot include " + std::to_string(b.strands()) + " strands into " +
                      std::to_string(new_strands));
  }
  return PureBraid(b.word().with_strands(new_strands));
}

PureBraid shift(const PureBraid& b, int offset) {
  if (offset < 0) throw DomainError("shift offset must be non-negative");
  std::vector<Letter> out = b.word().letters();
  for (Letter& l : out) l.pos += offset;
  return PureBraid(SigmaWord(b.strands() + offset, std::move(out)), PureBraid::Trusted{});
}

PureBraid tensor(const PureBraid& b1, const PureBraid& b2) {
  if (b1.strands() % 2 == 0 || b2.strands() % 2 == 0) {
    throw DomainError("tensor product needs odd strand counts");
  }
  const int total = b1.strands() + b2.strands() - 1;
  return include(b1, total) * shift(b2, b1.strands() - 1);
}

PureBraid commutator(const PureBraid& a, const PureBraid& b) {
  return (a * b * a.inverse() * b.inverse()).reduced();
}

PureBraid double_strand(const PureBraid& b, int i) {
  if (i < 1 || i > b.strands()) {
    throw DomainError("cannot double strand " + std::to_string(i) + " of a " +
                      std::to_string(b.strands()) + "-strand braid");
  }
  std::vector<Letter> out;
  out.reserve(b.length() * 2);
  int cable = i;  // current position of the doubled strand in the original word
  for (const Letter& l : b.word().letters()) {
    const int k = l.pos;
    if (cable == k) {
      // the strand from k+1 crosses both daughters, landing on k
      out.push_back({k + 1, l.sign});
      out.push_back({k, l.sign});
      cable = k + 1;
    } else if (cable == k + 1) {
      // the daughters move together from k+1..k+2 to k..k+1
      out.push_back({k, l.sign});
      out.push_back({k + 1, l.sign});
      cable = k;
    } else {
      out.push_back({k < cable ? k : k + 1, l.sign});
    }
  }
  check_length(out.size());
  return PureBraid(SigmaWord(b.strands() + 1, std::move(out)), PureBraid::Trusted{});
}

SigmaWord erase_strand(const SigmaWord& w, int i) {
  if (i < 1 || i > w.strands() || w.strands() < 2) throw DomainError("cannot erase strand " + std::to_string(i));
  std::vector<Letter> out;
  int erased = i;
  for (const Letter& l : w.letters()) {
    if (erased == l.pos) {
      erased = l.pos + 1;
    } else if (erased == l.pos + 1) {
      erased = l.pos;
    } else {
      out.push_back({l.pos < erased ? l.pos : l.pos - 1, l.sign});
    }
  }
  return SigmaWord(w.strands() - 1, std::move(out));
}

// --- Free groups ---------------------------------------------------------------

FreeGroupWord::FreeGroupWord(const std::vector<FreeLetter>& letters) {
  letters_.reserve(letters.size());
  for (const FreeLetter& l : letters) {
    if (l.gen < 1 || (l.sign != 1 && l.sign != -1)) throw DomainError("bad free-group letter");
    push(l);
  }
}

FreeGroupWord FreeGroupWord::generator(int g, int sign) { return FreeGroupWord({{g, sign}}); }

void FreeGroupWord::push(FreeLetter l) {
  if (!letters_.empty() && letters_.back().gen == l.gen && letters_.back().sign == -l.sign) {
    letters_.pop_back();
  } else {
    letters_.push_back(l);
  }
}

int FreeGroupWord::max_generator() const {
  int m = 0;
  for (const FreeLetter& l : letters_) m = std::max(m, l.gen);
  return m;
}

FreeGroupWord FreeGroupWord::inverse() const {
  FreeGroupWord out;
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.letters_.push_back({it->gen, -it->sign});
  return out;
}

FreeGroupWord FreeGroupWord::operator*(const FreeGroupWord& rhs) const {
  FreeGroupWord out = *this;
  out.letters_.reserve(letters_.size() + rhs.letters_.size());
  for (const FreeLetter& l : rhs.letters_) out.push(l);
  check_length(out.letters_.size());
  return out;
}

std::string FreeGroupWord::to_string() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (const FreeLetter& l : letters_) {
    if (!out.empty()) out += ' ';
    out += 'x' + std::to_string(l.gen);
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

FreeGroupWord free_commutator(const FreeGroupWord& u, const FreeGroupWord& v) {
  return u * v * u.inverse() * v.inverse();
}

FreeEndo FreeEndo::identity(int rank) {
  std::vector<FreeGroupWord> images;
  images.reserve(static_cast<std::size_t>(rank));
  for (int g = 1; g <= rank; ++g) images.push_back(FreeGroupWord::generator(g));
  return FreeEndo(std::move(images));
}

FreeEndo::FreeEndo(std::vector<FreeGroupWord> images) : images_(std::move(images)) {}

FreeGroupWord FreeEndo::apply(const FreeGroupWord& w) const {
  FreeGroupWord out;
  for (const FreeLetter& l : w.letters()) {
    if (l.gen > rank()) {
      out = out * FreeGroupWord::generator(l.gen, l.sign);
    } else {
      const FreeGroupWord& img = image(l.gen);
      out = out * (l.sign > 0 ? img : img.inverse());
    }
  }
  return out;
}

FreeEndo FreeEndo::compose(const FreeEndo& other) const {
  std::vector<FreeGroupWord> images;
  const int r = std::max(rank(), other.rank());
  for (int g = 1; g <= r; ++g) {
    images.push_back(apply(g <= other.rank() ? other.image(g) : FreeGroupWord::generator(g)));
  }
  return FreeEndo(std::move(images));
}

FreeEndo artin_action(const SigmaWord& w) {
  // phi_{u s} = phi_u o phi_s, so each letter substitutes the current images
  // into the one-letter substitution.
  std::vector<FreeGroupWord> img = FreeEndo::identity(w.strands()).images();
  for (const Letter& l : w.letters()) {
    auto& a = img[static_cast<std::size_t>(l.pos - 1)];
    auto& b = img[static_cast<std::size_t>(l.pos)];
    if (l.sign > 0) {
      FreeGroupWord na = a * b * a.inverse();
      b = a;
      a = std::move(na);
    } else {
      FreeGroupWord nb = b.inverse() * a * b;
      a = b;
      b = std::move(nb);
    }
  }
  return FreeEndo(std::move(img));
}

}  // namespace scknot
