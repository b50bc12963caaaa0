#include "scknot/search.hpp"

#include <map>

#include "scknot/closure.hpp"

namespace scknot {

std::string SearchEntry::word_text() const {
  if (word.empty()) return "1";
  std::string out;
  for (const AGenerator& g : word) {
    if (!out.empty()) out += ' ';
    out += g.to_string();
  }
  return out;
}

namespace {

struct Key {
  std::map<int, std::int64_t> jones;
  std::int64_t v2, v3;
  auto operator<=>(const Key&) const = default;
};

}  // namespace

SearchSummary enumerate_closures(int strands, int max_length, int crossing_cap, Execution exec) {
  if (strands < 1 || strands % 2 == 0) throw DomainError("search needs an odd strand count");
  if (max_length < 0) throw DomainError("max length must be non-negative");
  std::vector<AGenerator> alphabet;
  for (int i = 1; i <= strands; ++i) {
    for (int j = i + 1; j <= strands; ++j) {
      alphabet.emplace_back(i, j, 1);
      alphabet.emplace_back(i, j, -1);
    }
  }

  std::vector<std::vector<int>> words = {{}};
  for (std::size_t lo = 0, len = 1; len <= static_cast<std::size_t>(max_length); ++len) {
    const std::size_t hi = words.size();
    for (std::size_t w = lo; w < hi; ++w) {
      for (int a = 0; a < static_cast<int>(alphabet.size()); ++a) {
        // letters 2k and 2k+1 are mutually inverse
        if (!words[w].empty() && (words[w].back() ^ 1) == a) continue;
        std::vector<int> next = words[w];
        next.push_back(a);
        words.push_back(std::move(next));
      }
    }
    lo = hi;
  }

  std::vector<Fingerprint> prints(words.size());
  std::vector<PureBraid> braids(words.size());
  auto evaluate = [&](std::size_t k) {
    PureBraid b = PureBraid::identity(strands);
    for (int a : words[k]) b = b * expand_A_generator(alphabet[static_cast<std::size_t>(a)], strands);
    prints[k] = fingerprint(short_circuit_close(b), crossing_cap);
    braids[k] = std::move(b);
  };
  const auto n = static_cast<long long>(words.size());
  if (exec == Execution::parallel) {
    // exceptions may not leave the parallel region
    std::vector<std::string> failures(words.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (long long k = 0; k < n; ++k) {
      try {
        evaluate(static_cast<std::size_t>(k));
      } catch (const Error& e) {
        failures[static_cast<std::size_t>(k)] = e.what();
      }
    }
    for (const std::string& f : failures) {
      if (!f.empty()) throw ResourceError(f);
    }
  } else {
    for (long long k = 0; k < n; ++k) evaluate(static_cast<std::size_t>(k));
  }

  SearchSummary out;
  out.strands = strands;
  out.max_length = max_length;
  out.words = words.size();
  std::map<Key, std::size_t> index;
  for (std::size_t k = 0; k < words.size(); ++k) {
    const Key key{prints[k].jones.terms(), prints[k].v2, prints[k].v3};
    auto [it, fresh] = index.emplace(key, out.entries.size());
    if (fresh) {
      SearchEntry e;
      e.fingerprint = prints[k];
      for (int a : words[k]) e.word.push_back(alphabet[static_cast<std::size_t>(a)]);
      e.braid = braids[k];
      e.bridge_upper_bound = bridge_upper_bound(braids[k]);
      out.entries.push_back(std::move(e));
    }
    ++out.entries[it->second].hits;
  }
  return out;
}

}  // namespace scknot
