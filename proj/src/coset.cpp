#include "scknot/coset.hpp"

#include <algorithm>
#include <map>

#include "scknot/closure.hpp"
#include "scknot/random.hpp"

namespace scknot {

const char* to_string(Side s) { return s == Side::top ? "T" : "B"; }

std::string CosetGenerator::name() const {
  if (kind == GeneratorKind::adjacent) return "A(" + std::to_string(i) + "," + std::to_string(i + 1) + ")";
  return "phi" + std::to_string(i) + "(A(" + std::to_string(i) + "," + std::to_string(j) + "))";
}

namespace {

std::vector<CosetGenerator> generators(int strands, Side side) {
  if (strands < 3 || strands % 2 == 0) throw DomainError("coset generators need an odd strand count >= 3");
  const int parity = side == Side::top ? 0 : 1;
  std::vector<CosetGenerator> out;
  for (int i = 1; i + 1 <= strands; ++i) {
    if (i % 2 != parity) continue;
    out.push_back({side, GeneratorKind::adjacent, i, i + 1, expand_A_generator(AGenerator(i, i + 1), strands)});
  }
  for (int i = 1; i <= strands - 1; ++i) {
    if (i % 2 != parity) continue;
    for (int j = 1; j <= strands - 1; ++j) {
      if (j == i) continue;
      PureBraid a = expand_A_generator(AGenerator(i, j), strands - 1);
      out.push_back({side, GeneratorKind::doubled, i, j, double_strand(a, i)});
    }
  }
  return out;
}

}  // namespace

std::vector<CosetGenerator> ht_generators(int strands) { return generators(strands, Side::top); }
std::vector<CosetGenerator> hb_generators(int strands) { return generators(strands, Side::bottom); }

PureBraid apply_action(const PureBraid& b, const CosetGenerator& g, int exponent) {
  if (exponent != 1 && exponent != -1) throw DomainError("action exponent must be +1 or -1");
  const int n = std::max(b.strands(), g.braid.strands());
  const PureBraid base = include(b, n);
  const PureBraid h = exponent > 0 ? include(g.braid, n) : include(g.braid.inverse(), n);
  return (g.side == Side::top ? h * base : base * h).reduced();
}

OrbitWalk random_orbit_walk(const PureBraid& b, int steps, std::uint64_t seed) {
  if (steps < 0) throw DomainError("steps must be non-negative");
  Rng rng(seed);
  OrbitWalk walk;
  walk.braids.push_back(b);
  for (int s = 0; s < steps; ++s) {
    const PureBraid& cur = walk.braids.back();
    int n = std::max(cur.strands() % 2 == 1 ? cur.strands() : cur.strands() + 1, 3);
    if (uniform_int(rng, 0, 3) == 0) n += 2;
    const Side side = uniform_int(rng, 0, 1) == 0 ? Side::top : Side::bottom;
    const auto gens = side == Side::top ? ht_generators(n) : hb_generators(n);
    const CosetGenerator& g = gens[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(gens.size()) - 1))];
    const int e = uniform_int(rng, 0, 1) == 0 ? 1 : -1;
    walk.braids.push_back(apply_action(cur, g, e));
    walk.moves.push_back({side, g.name(), e});
  }
  return walk;
}

std::string OrbitLogRecord::to_text() const {
  std::string out = "step " + std::to_string(step);
  if (move) {
    out += " side " + std::string(to_string(move->side)) + " generator " + move->generator + " exponent " +
           std::to_string(move->exponent);
  } else {
    out += " start";
  }
  out += " length " + std::to_string(word_length) + " " + fingerprint.to_string();
  return out;
}

std::vector<OrbitLogRecord> orbit_log(const OrbitWalk& walk, int crossing_cap) {
  std::vector<OrbitLogRecord> out;
  for (std::size_t k = 0; k < walk.braids.size(); ++k) {
    OrbitLogRecord r;
    r.step = static_cast<int>(k);
    if (k > 0) r.move = walk.moves[k - 1];
    const PureBraid& b = walk.braids[k];
    r.word_length = b.length();
    const PureBraid odd = b.strands() % 2 == 1 ? b : include(b, b.strands() + 1);
    r.fingerprint = fingerprint(short_circuit_close(odd), crossing_cap);
    out.push_back(std::move(r));
  }
  return out;
}

namespace {

std::string artin_key(const PureBraid& b) {
  const FreeEndo phi = artin_action(b);
  std::string key;
  for (const FreeGroupWord& w : phi.images()) key += w.to_string() + "|";
  return key;
}

struct Visit {
  std::string parent;
  OrbitMove move;
};

}  // namespace

OrbitSearchResult orbit_search(const PureBraid& from, const PureBraid& to, int depth, std::size_t budget) {
  OrbitSearchResult result;
  int n = std::max(from.strands(), to.strands());
  if (n % 2 == 0) ++n;
  n = std::max(n, 3);
  std::vector<std::pair<CosetGenerator, int>> moves;
  for (const auto& g : ht_generators(n)) moves.emplace_back(g, 1), moves.emplace_back(g, -1);
  for (const auto& g : hb_generators(n)) moves.emplace_back(g, 1), moves.emplace_back(g, -1);

  std::map<std::string, Visit> seen[2];
  std::vector<std::pair<std::string, PureBraid>> frontier[2];
  try {
    const PureBraid start[2] = {include(from, n), include(to, n)};
    for (int side = 0; side < 2; ++side) {
      const std::string key = artin_key(start[side]);
      seen[side].emplace(key, Visit{});
      frontier[side].emplace_back(key, start[side]);
    }

    auto path_to_root = [&](int side, std::string key) {
      std::vector<OrbitMove> path;
      while (!seen[side].at(key).parent.empty() || seen[side].at(key).move.generator.size() > 0) {
        const Visit& v = seen[side].at(key);
        path.push_back(v.move);
        key = v.parent;
      }
      std::reverse(path.begin(), path.end());
      return path;
    };
    auto meet = [&](const std::string& key) {
      result.outcome = SearchOutcome::found;
      result.path = path_to_root(0, key);
      auto back = path_to_root(1, key);
      for (auto it = back.rbegin(); it != back.rend(); ++it) result.path.push_back({it->side, it->generator, -it->exponent});
    };

    if (seen[1].count(frontier[0].front().first)) {
      meet(frontier[0].front().first);
      return result;
    }
    for (int level = 0; level < depth; ++level) {
      const int side = level % 2;
      std::vector<std::pair<std::string, PureBraid>> next;
      for (const auto& [key, b] : frontier[side]) {
        for (const auto& [g, e] : moves) {
          if (result.explored >= budget) return result;
          ++result.explored;
          PureBraid nb = apply_action(b, g, e);
          std::string nk = artin_key(nb);
          if (seen[side].count(nk)) continue;
          seen[side].emplace(nk, Visit{key, {g.side, g.name(), e}});
          if (seen[1 - side].count(nk)) {
            meet(nk);
            return result;
          }
          next.emplace_back(std::move(nk), std::move(nb));
        }
      }
      frontier[side] = std::move(next);
    }
  } catch (const ResourceError&) {
    result.outcome = SearchOutcome::not_found_within_budget;
    result.path.clear();
  }
  return result;
}

}  // namespace scknot
