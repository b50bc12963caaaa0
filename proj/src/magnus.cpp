#include "scknot/magnus.hpp"

#include <algorithm>

namespace scknot {

TruncatedSeries::TruncatedSeries(int generators, int max_degree) : k_(generators), max_degree_(max_degree) {
  if (k_ < 1) throw DomainError("a series needs at least one symbol");
  if (max_degree_ < 0) throw DomainError("max degree must be non-negative");
  offset_.push_back(0);
  std::size_t block = 1;
  for (int d = 0; d <= max_degree_; ++d) {
    offset_.push_back(offset_.back() + block);
    if (d < max_degree_) {
      block *= static_cast<std::size_t>(k_);
      if (offset_.back() + block > (std::size_t{1} << 28)) throw ResourceError("truncated series too large");
    }
  }
  coeffs_.assign(offset_.back(), 0);
}

TruncatedSeries TruncatedSeries::one(int generators, int max_degree) {
  TruncatedSeries s(generators, max_degree);
  s.coeffs_[0] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::of_letter(int generators, int max_degree, int g, int sign) {
  if (g < 1 || g > generators) throw DomainError("symbol out of range");
  TruncatedSeries s = one(generators, max_degree);
  std::vector<int> word;
  for (int d = 1; d <= max_degree; ++d) {
    word.push_back(g);
    if (sign > 0 && d > 1) break;
    s.set_coefficient(word, (sign < 0 && d % 2 == 1) ? -1 : 1);
  }
  return s;
}

std::size_t TruncatedSeries::index_of(const std::vector<int>& word) const {
  const int d = static_cast<int>(word.size());
  if (d > max_degree_) throw DomainError("word longer than the truncation degree");
  std::size_t idx = 0;
  for (int g : word) {
    if (g < 1 || g > k_) throw DomainError("symbol out of range");
    idx = idx * static_cast<std::size_t>(k_) + static_cast<std::size_t>(g - 1);
  }
  return offset_[static_cast<std::size_t>(d)] + idx;
}

std::int64_t TruncatedSeries::coefficient(const std::vector<int>& word) const {
  if (static_cast<int>(word.size()) > max_degree_) return 0;
  return static_cast<std::int64_t>(coeffs_[index_of(word)]);
}

void TruncatedSeries::set_coefficient(const std::vector<int>& word, std::int64_t value) {
  coeffs_[index_of(word)] = static_cast<std::uint64_t>(value);
}

std::map<std::vector<int>, std::int64_t> TruncatedSeries::terms() const {
  std::map<std::vector<int>, std::int64_t> out;
  for (int d = 0; d <= max_degree_; ++d) {
    const std::size_t lo = offset_[static_cast<std::size_t>(d)];
    const std::size_t hi = offset_[static_cast<std::size_t>(d) + 1];
    for (std::size_t i = lo; i < hi; ++i) {
      if (coeffs_[i] == 0) continue;
      std::vector<int> word(static_cast<std::size_t>(d));
      std::size_t rest = i - lo;
      for (int p = d - 1; p >= 0; --p) {
        word[static_cast<std::size_t>(p)] = static_cast<int>(rest % static_cast<std::size_t>(k_)) + 1;
        rest /= static_cast<std::size_t>(k_);
      }
      out.emplace(std::move(word), static_cast<std::int64_t>(coeffs_[i]));
    }
  }
  return out;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& rhs) const {
  if (k_ != rhs.k_ || max_degree_ != rhs.max_degree_) throw DomainError("series shapes differ");
  TruncatedSeries out(k_, max_degree_);
  for (int da = 0; da <= max_degree_; ++da) {
    const std::size_t a_lo = offset_[static_cast<std::size_t>(da)];
    const std::size_t a_n = offset_[static_cast<std::size_t>(da) + 1] - a_lo;
    for (int db = 0; da + db <= max_degree_; ++db) {
      const std::size_t b_lo = offset_[static_cast<std::size_t>(db)];
      const std::size_t b_n = offset_[static_cast<std::size_t>(db) + 1] - b_lo;
      const std::size_t o_lo = offset_[static_cast<std::size_t>(da + db)];
      const std::uint64_t* b = rhs.coeffs_.data() + b_lo;
      for (std::size_t ia = 0; ia < a_n; ++ia) {
        const std::uint64_t ca = coeffs_[a_lo + ia];
        if (ca == 0) continue;
        std::uint64_t* o = out.coeffs_.data() + o_lo + ia * b_n;
        for (std::size_t ib = 0; ib < b_n; ++ib) o[ib] += ca * b[ib];
      }
    }
  }
  return out;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& rhs) const {
  if (k_ != rhs.k_ || max_degree_ != rhs.max_degree_) throw DomainError("series shapes differ");
  TruncatedSeries out = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] += rhs.coeffs_[i];
  return out;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& rhs) const {
  if (k_ != rhs.k_ || max_degree_ != rhs.max_degree_) throw DomainError("series shapes differ");
  TruncatedSeries out = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] -= rhs.coeffs_[i];
  return out;
}

int TruncatedSeries::deviation_degree() const {
  for (int d = 1; d <= max_degree_; ++d) {
    const auto lo = coeffs_.begin() + static_cast<std::ptrdiff_t>(offset_[static_cast<std::size_t>(d)]);
    const auto hi = coeffs_.begin() + static_cast<std::ptrdiff_t>(offset_[static_cast<std::size_t>(d) + 1]);
    if (std::any_of(lo, hi, [](std::uint64_t c) { return c != 0; })) return d;
  }
  return max_degree_ + 1;
}

std::string TruncatedSeries::to_string() const {
  std::string out;
  for (const auto& [word, c] : terms()) {
    std::string mono;
    for (int g : word) mono += "X" + std::to_string(g);
    const std::int64_t mag = c < 0 ? -c : c;
    if (out.empty()) {
      out += c < 0 ? "-" : "";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mono.empty()) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag);
      out += mono;
    }
  }
  return out.empty() ? "0" : out;
}

TruncatedSeries magnus_expand(const FreeGroupWord& w, int max_degree, int generators) {
  if (max_degree < 1) throw DomainError("max degree must be >= 1");
  const int k = std::max({generators, w.max_generator(), 1});
  TruncatedSeries out = TruncatedSeries::one(k, max_degree);
  for (const FreeLetter& l : w.letters()) out = out * TruncatedSeries::of_letter(k, max_degree, l.gen, l.sign);
  return out;
}

std::vector<TruncatedSeries> magnus_artin_images(const SigmaWord& w, int max_degree) {
  const int k = w.strands();
  std::vector<TruncatedSeries> img, inv;
  for (int g = 1; g <= k; ++g) {
    img.push_back(TruncatedSeries::of_letter(k, max_degree, g, 1));
    inv.push_back(TruncatedSeries::of_letter(k, max_degree, g, -1));
  }
  // Same substitution order as artin_action, with inverses carried along.
  for (const Letter& l : w.letters()) {
    const auto a = static_cast<std::size_t>(l.pos - 1);
    const auto b = a + 1;
    if (l.sign > 0) {
      TruncatedSeries na = img[a] * img[b] * inv[a];
      TruncatedSeries na_inv = img[a] * inv[b] * inv[a];
      img[b] = std::move(img[a]);
      inv[b] = std::move(inv[a]);
      img[a] = std::move(na);
      inv[a] = std::move(na_inv);
    } else {
      TruncatedSeries nb = inv[b] * img[a] * img[b];
      TruncatedSeries nb_inv = inv[b] * inv[a] * img[b];
      img[a] = std::move(img[b]);
      inv[a] = std::move(inv[b]);
      img[b] = std::move(nb);
      inv[b] = std::move(nb_inv);
    }
  }
  return img;
}

namespace {

int johnson_from_deviations(const std::vector<TruncatedSeries>& deviations, int dmax) {
  int lowest = dmax + 2;
  for (const TruncatedSeries& d : deviations) lowest = std::min(lowest, d.deviation_degree());
  return std::min(lowest - 1, dmax);
}

}  // namespace

int johnson_degree(const PureBraid& b, int dmax) {
  if (dmax < 1) throw DomainError("dmax must be >= 1");
  const int k = b.strands();
  const auto images = magnus_artin_images(b.word(), dmax + 1);
  std::vector<TruncatedSeries> dev;
  for (int j = 1; j <= k; ++j) {
    dev.push_back(images[static_cast<std::size_t>(j - 1)] * TruncatedSeries::of_letter(k, dmax + 1, j, -1));
  }
  return johnson_from_deviations(dev, dmax);
}

int johnson_degree_via_words(const PureBraid& b, int dmax) {
  if (dmax < 1) throw DomainError("dmax must be >= 1");
  const int k = b.strands();
  const FreeEndo phi = artin_action(b);
  std::vector<TruncatedSeries> dev;
  for (int j = 1; j <= k; ++j) {
    dev.push_back(magnus_expand(phi.image(j) * FreeGroupWord::generator(j, -1), dmax + 1, k));
  }
  return johnson_from_deviations(dev, dmax);
}

}  // namespace scknot
