#include "scknot/closure.hpp"

#include <algorithm>
#include <numeric>

namespace scknot {

namespace {

struct LetterStrands {
  int left = 0;   // strand (named by top position) at position k before the letter
  int right = 0;  // strand at position k+1
  int over = 0;
  int sign = 1;
};

std::vector<LetterStrands> letter_strands(const SigmaWord& w) {
  std::vector<int> at(static_cast<std::size_t>(w.strands()));
  std::iota(at.begin(), at.end(), 1);
  std::vector<LetterStrands> out;
  out.reserve(w.length());
  for (const Letter& l : w.letters()) {
    int& left = at[static_cast<std::size_t>(l.pos - 1)];
    int& right = at[static_cast<std::size_t>(l.pos)];
    out.push_back({left, right, l.sign > 0 ? right : left, l.sign});
    std::swap(left, right);
  }
  return out;
}

struct Pass {
  int strand = 1;
  int dir = 1;  // +1 downwards
};

// Walks the given strands in order, emitting one Gauss entry per crossing met.
LongKnotDiagram trace(const SigmaWord& w, const std::vector<Pass>& route) {
  const auto info = letter_strands(w);
  std::vector<std::vector<int>> on(static_cast<std::size_t>(w.strands()) + 1);
  for (std::size_t t = 0; t < info.size(); ++t) {
    on[static_cast<std::size_t>(info[t].left)].push_back(static_cast<int>(t));
    on[static_cast<std::size_t>(info[t].right)].push_back(static_cast<int>(t));
  }
  std::vector<int> dir(static_cast<std::size_t>(w.strands()) + 1, 0);
  for (const Pass& p : route) dir[static_cast<std::size_t>(p.strand)] = p.dir;

  std::vector<GaussEntry> gauss;
  gauss.reserve(2 * info.size());
  auto emit = [&](int strand, int t) {
    const LetterStrands& x = info[static_cast<std::size_t>(t)];
    const int sign = x.sign * dir[static_cast<std::size_t>(x.left)] * dir[static_cast<std::size_t>(x.right)];
    gauss.push_back({t + 1, x.over == strand, sign});
  };
  for (const Pass& p : route) {
    const auto& list = on[static_cast<std::size_t>(p.strand)];
    if (p.dir > 0) {
      for (int t : list) emit(p.strand, t);
    } else {
      for (auto it = list.rbegin(); it != list.rend(); ++it) emit(p.strand, *it);
    }
  }
  return LongKnotDiagram::from_gauss(gauss);
}

std::vector<int> partner_table(const std::vector<std::pair<int, int>>& pairs, int n, const char* side) {
  std::vector<int> partner(static_cast<std::size_t>(n) + 1, 0);
  for (auto [a, b] : pairs) {
    if (a < 1 || b < 1 || a > n || b > n || a == b || partner[static_cast<std::size_t>(a)] != 0 ||
        partner[static_cast<std::size_t>(b)] != 0) {
      throw DomainError(std::string(side) + " pairing is not a perfect matching");
    }
    partner[static_cast<std::size_t>(a)] = b;
    partner[static_cast<std::size_t>(b)] = a;
  }
  for (int p = 1; p <= n; ++p) {
    if (partner[static_cast<std::size_t>(p)] == 0) throw DomainError(std::string(side) + " pairing misses " + std::to_string(p));
  }
  for (auto [a, b] : pairs) {
    for (auto [c, d] : pairs) {
      const int lo1 = std::min(a, b), hi1 = std::max(a, b);
      const int lo2 = std::min(c, d), hi2 = std::max(c, d);
      if (lo1 < lo2 && lo2 < hi1 && hi1 < hi2) throw DomainError(std::string(side) + " pairing has crossing caps");
    }
  }
  return partner;
}

}  // namespace

LongKnotDiagram short_circuit_close(const PureBraid& b) {
  if (b.strands() % 2 == 0) throw DomainError("short-circuit closure needs an odd strand count");
  std::vector<Pass> route;
  for (int s = 1; s <= b.strands(); ++s) route.push_back({s, s % 2 == 1 ? 1 : -1});
  return trace(b.word(), route);
}

PlatPairing PlatPairing::standard(int strands) {
  PlatPairing p;
  for (int k = 1; k + 1 <= strands; k += 2) {
    p.top.emplace_back(k, k + 1);
    p.bottom.emplace_back(k, k + 1);
  }
  return p;
}

int plat_component_count(const SigmaWord& w, const PlatPairing& pairing) {
  const int n = w.strands();
  if (n % 2 != 0) throw DomainError("plat closure needs an even strand count");
  const auto top = partner_table(pairing.top, n, "top");
  const auto bottom = partner_table(pairing.bottom, n, "bottom");
  const Permutation inv = permutation(w).inverse();
  std::vector<int> parent(static_cast<std::size_t>(n) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  auto unite = [&](int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); };
  for (int p = 1; p <= n; ++p) {
    unite(p, top[static_cast<std::size_t>(p)]);
    unite(inv(p), inv(bottom[static_cast<std::size_t>(p)]));
  }
  int comps = 0;
  for (int p = 1; p <= n; ++p) comps += find(p) == p ? 1 : 0;
  return comps;
}

LongKnotDiagram plat_close(const SigmaWord& w, const PlatPairing& pairing) {
  const int comps = plat_component_count(w, pairing);
  if (comps != 1) throw DomainError("plat closure has " + std::to_string(comps) + " components");
  const int n = w.strands();
  const auto top = partner_table(pairing.top, n, "top");
  const auto bottom = partner_table(pairing.bottom, n, "bottom");
  const Permutation perm = permutation(w);
  const Permutation inv = perm.inverse();

  const int finish = top[1];
  std::vector<Pass> route;
  int s = 1;
  while (true) {
    route.push_back({s, 1});
    const int up = inv(bottom[static_cast<std::size_t>(perm(s))]);
    route.push_back({up, -1});
    if (up == finish) break;
    s = top[static_cast<std::size_t>(up)];
  }
  return trace(w, route);
}

SigmaWord t_braid(int n) {
  if (n < 1) throw DomainError("t_braid needs n >= 1");
  std::vector<Letter> letters;
  for (int k = 1; k <= 2 * n - 1; ++k) letters.push_back({k, 1});
  return SigmaWord(2 * n, std::move(letters));
}

LongKnotDiagram connect_sum(const LongKnotDiagram& d1, const LongKnotDiagram& d2) {
  std::vector<GaussEntry> g = d1.gauss();
  const int offset = d1.crossing_count();
  for (GaussEntry e : d2.gauss()) {
    e.crossing += offset;
    g.push_back(e);
  }
  return LongKnotDiagram::from_gauss(g);
}

LongKnotDiagram simplify(const LongKnotDiagram& d) {
  std::vector<GaussEntry> g = d.gauss();
  bool changed = true;
  while (changed) {
    changed = false;

    // R1: a crossing met twice in a row is a kink. Stack scan so that
    // nested kinks collapse in one pass.
    std::vector<GaussEntry> kept;
    kept.reserve(g.size());
    for (const GaussEntry& e : g) {
      if (!kept.empty() && kept.back().crossing == e.crossing) {
        kept.pop_back();
        changed = true;
      } else {
        kept.push_back(e);
      }
    }
    g.swap(kept);

    // R2: two crossings passed consecutively over (or under) on one strand
    // and consecutively on another, with opposite signs.
    int max_id = 0;
    for (const GaussEntry& e : g) max_id = std::max(max_id, e.crossing);
    std::vector<std::array<int, 2>> where(static_cast<std::size_t>(max_id) + 1, {-1, -1});
    for (std::size_t p = 0; p < g.size(); ++p) {
      auto& slot = where[static_cast<std::size_t>(g[p].crossing)];
      slot[slot[0] < 0 ? 0 : 1] = static_cast<int>(p);
    }
    auto other = [&](int id, int p) {
      const auto& slot = where[static_cast<std::size_t>(id)];
      return slot[0] == p ? slot[1] : slot[0];
    };
    std::vector<bool> dead(static_cast<std::size_t>(max_id) + 1, false);
    bool removed = false;
    for (std::size_t p = 0; p + 1 < g.size(); ++p) {
      const GaussEntry& a = g[p];
      const GaussEntry& b = g[p + 1];
      if (a.crossing == b.crossing || a.over != b.over || a.sign != -b.sign) continue;
      if (dead[static_cast<std::size_t>(a.crossing)] || dead[static_cast<std::size_t>(b.crossing)]) continue;
      const int qa = other(a.crossing, static_cast<int>(p));
      const int qb = other(b.crossing, static_cast<int>(p) + 1);
      if (qa - qb != 1 && qb - qa != 1) continue;
      dead[static_cast<std::size_t>(a.crossing)] = true;
      dead[static_cast<std::size_t>(b.crossing)] = true;
      removed = true;
    }
    if (removed) {
      std::erase_if(g, [&](const GaussEntry& e) { return dead[static_cast<std::size_t>(e.crossing)]; });
      changed = true;
    }
  }
  return LongKnotDiagram::from_gauss(g);
}

LongKnotDiagram mirror(const LongKnotDiagram& d) {
  std::vector<GaussEntry> g = d.gauss();
  for (GaussEntry& e : g) {
    e.over = !e.over;
    e.sign = -e.sign;
  }
  return LongKnotDiagram::from_gauss(g);
}

int bridge_upper_bound(const PureBraid& b) {
  const int used = b.word().max_position() + 1;
  const int odd = used % 2 == 1 ? used : used + 1;
  return (odd - 1) / 2 + 1;
}

}  // namespace scknot
