#include "scknot/invariants.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <unordered_map>
#include <vector>

#include "scknot/closure.hpp"
#include "scknot/error.hpp"

namespace scknot {

std::int64_t writhe(const LongKnotDiagram& d) {
  std::int64_t w = 0;
  for (const Crossing& x : d.crossings()) w += x.sign;
  return w;
}

namespace {

using Poly = LaurentPoly;

const Poly& delta_power(int k) {
  // thread_local: the table grows on demand and bracket calls may run concurrently
  thread_local std::vector<Poly> table{Poly::constant(1, Poly::Variable::A)};
  while (static_cast<int>(table.size()) <= k) {
    Poly delta = Poly::monomial(-1, 2, Poly::Variable::A) + Poly::monomial(-1, -2, Poly::Variable::A);
    table.push_back(table.back() * delta);
  }
  return table[static_cast<std::size_t>(k)];
}

// Partial state of the sweep: for each boundary edge (in the order of the
// current boundary list) the index of the boundary edge it is joined to
// through the processed crossings. kFlag marks the pair whose connecting path
// runs through the point at infinity (the open ends of the long knot).
using Key = std::vector<std::uint8_t>;
constexpr std::uint8_t kFlag = 0x80;
constexpr std::uint8_t kIndexMask = 0x7f;

struct KeyHash {
  std::size_t operator()(const Key& k) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto b : k) h = (h ^ b) * 1099511628211ull;
    return h;
  }
};

struct Transition {
  Key key;
  int loops = 0;
};

class BracketSweep {
 public:
  explicit BracketSweep(const LongKnotDiagram& d) : d_(d) {}

  Poly run() {
    const int c = d_.crossing_count();
    if (c == 0) return Poly::constant(1, Poly::Variable::A);
    const int last_edge = 2 * c;
    boundary_ = {0, last_edge};
    states_.clear();
    states_.emplace(Key{static_cast<std::uint8_t>(1 | kFlag), static_cast<std::uint8_t>(0 | kFlag)},
                    Poly::constant(1, Poly::Variable::A));
    std::vector<bool> done(static_cast<std::size_t>(c), false);
    for (int step = 0; step < c; ++step) {
      const int x = pick_next(done);
      done[static_cast<std::size_t>(x)] = true;
      absorb(d_.crossings()[static_cast<std::size_t>(x)].pd);
    }
    if (!boundary_.empty() || states_.size() != 1) throw InternalError("bracket sweep did not close up");
    return states_.begin()->second;
  }

 private:
  int pick_next(const std::vector<bool>& done) const {
    int best = -1;
    int best_score = -1;
    for (int x = 0; x < d_.crossing_count(); ++x) {
      if (done[static_cast<std::size_t>(x)]) continue;
      const auto& pd = d_.crossings()[static_cast<std::size_t>(x)].pd;
      int score = 0;
      for (int e : pd) score += std::find(boundary_.begin(), boundary_.end(), e) != boundary_.end() ? 1 : 0;
      if (score > best_score) {
        best = x;
        best_score = score;
      }
    }
    return best;
  }

  void absorb(const std::array<int, 4>& legs) {
    const int m = static_cast<int>(boundary_.size());
    std::array<int, 4> leg_boundary{-1, -1, -1, -1};  // boundary index of the leg's edge
    std::array<int, 4> leg_twin{-1, -1, -1, -1};      // other leg carrying the same edge
    for (int l = 0; l < 4; ++l) {
      auto it = std::find(boundary_.begin(), boundary_.end(), legs[static_cast<std::size_t>(l)]);
      if (it != boundary_.end()) leg_boundary[static_cast<std::size_t>(l)] = static_cast<int>(it - boundary_.begin());
      for (int o = 0; o < 4; ++o) {
        if (o != l && legs[static_cast<std::size_t>(o)] == legs[static_cast<std::size_t>(l)]) leg_twin[static_cast<std::size_t>(l)] = o;
      }
    }

    // New boundary: old edges not touched here plus edges opened here.
    std::vector<int> next;
    std::vector<bool> consumed(static_cast<std::size_t>(m), false);
    for (int l = 0; l < 4; ++l) {
      if (leg_boundary[static_cast<std::size_t>(l)] >= 0) consumed[static_cast<std::size_t>(leg_boundary[static_cast<std::size_t>(l)])] = true;
    }
    for (int k = 0; k < m; ++k) {
      if (!consumed[static_cast<std::size_t>(k)]) next.push_back(boundary_[static_cast<std::size_t>(k)]);
    }
    for (int l = 0; l < 4; ++l) {
      if (leg_boundary[static_cast<std::size_t>(l)] < 0 && leg_twin[static_cast<std::size_t>(l)] < 0) next.push_back(legs[static_cast<std::size_t>(l)]);
    }
    std::sort(next.begin(), next.end());
    if (next.size() > kIndexMask) throw ResourceError("bracket sweep boundary too wide");

    // Terminal label of each node: index into `next`, or -1 for inner nodes.
    // Nodes 0..m-1 are boundary edges, m..m+3 the legs.
    std::vector<int> terminal(static_cast<std::size_t>(m) + 4, -1);
    auto index_in_next = [&](int edge) {
      return static_cast<int>(std::lower_bound(next.begin(), next.end(), edge) - next.begin());
    };
    for (int k = 0; k < m; ++k) {
      if (!consumed[static_cast<std::size_t>(k)]) terminal[static_cast<std::size_t>(k)] = index_in_next(boundary_[static_cast<std::size_t>(k)]);
    }
    for (int l = 0; l < 4; ++l) {
      if (leg_boundary[static_cast<std::size_t>(l)] < 0 && leg_twin[static_cast<std::size_t>(l)] < 0) {
        terminal[static_cast<std::size_t>(m + l)] = index_in_next(legs[static_cast<std::size_t>(l)]);
      }
    }

    std::unordered_map<Key, Poly, KeyHash> out;
    const Poly a_weight = Poly::monomial(1, 1, Poly::Variable::A);
    const Poly b_weight = Poly::monomial(1, -1, Poly::Variable::A);
    for (const auto& [key, poly] : states_) {
      for (int smoothing = 0; smoothing < 2; ++smoothing) {
        // A joins legs (0,1),(2,3); B joins (0,3),(1,2)
        const std::array<std::array<int, 2>, 2> pairs =
            smoothing == 0 ? std::array<std::array<int, 2>, 2>{{{0, 1}, {2, 3}}}
                           : std::array<std::array<int, 2>, 2>{{{0, 3}, {1, 2}}};
        Transition t = connect(key, pairs, leg_boundary, leg_twin, terminal, next.size());
        Poly term = poly * (smoothing == 0 ? a_weight : b_weight);
        if (t.loops > 0) term = term * delta_power(t.loops);
        auto [it, inserted] = out.try_emplace(std::move(t.key), term);
        if (!inserted) {
          it->second += term;
        }
      }
    }
    states_.clear();
    for (auto& [k, p] : out) {
      if (!p.is_zero()) states_.emplace(k, std::move(p));
    }
    if (states_.empty()) states_.emplace(Key(next.size(), 0), Poly(Poly::Variable::A));
    boundary_ = std::move(next);
  }

  Transition connect(const Key& key, const std::array<std::array<int, 2>, 2>& pairs,
                     const std::array<int, 4>& leg_boundary, const std::array<int, 4>& leg_twin,
                     const std::vector<int>& terminal, std::size_t next_size) const {
    const int m = static_cast<int>(key.size());
    const int nodes = m + 4;
    // Every node has at most two links; pairs of nodes may be joined twice.
    struct Link {
      int to = -1;
      int id = -1;
      bool flag = false;
    };
    std::vector<std::array<Link, 2>> nbr(static_cast<std::size_t>(nodes));
    int next_id = 0;
    auto link = [&](int a, int b, bool flag) {
      const int id = next_id++;
      for (auto [u, v] : {std::pair{a, b}, std::pair{b, a}}) {
        auto& slot = nbr[static_cast<std::size_t>(u)];
        slot[slot[0].to < 0 ? 0 : 1] = Link{v, id, flag};
      }
    };
    for (int k = 0; k < m; ++k) {
      const int j = key[static_cast<std::size_t>(k)] & kIndexMask;
      if (k < j) link(k, j, (key[static_cast<std::size_t>(k)] & kFlag) != 0);
    }
    for (int l = 0; l < 4; ++l) {
      if (leg_boundary[static_cast<std::size_t>(l)] >= 0) link(m + l, leg_boundary[static_cast<std::size_t>(l)], false);
      if (leg_twin[static_cast<std::size_t>(l)] > l) link(m + l, m + leg_twin[static_cast<std::size_t>(l)], false);
    }
    for (const auto& p : pairs) link(m + p[0], m + p[1], false);

    Transition t;
    t.key.assign(next_size, 0);
    std::vector<bool> seen(static_cast<std::size_t>(nodes), false);
    // Follows links from `start` until a terminal node or back to start.
    auto walk = [&](int start, bool& flag) {
      int cur = start;
      int came = -1;
      seen[static_cast<std::size_t>(cur)] = true;
      while (true) {
        const auto& nb = nbr[static_cast<std::size_t>(cur)];
        const std::size_t s = nb[0].to >= 0 && nb[0].id != came ? 0 : 1;
        if (nb[s].to < 0 || nb[s].id == came) return cur;
        flag = flag || nb[s].flag;
        came = nb[s].id;
        cur = nb[s].to;
        if (seen[static_cast<std::size_t>(cur)]) return cur;
        seen[static_cast<std::size_t>(cur)] = true;
        if (terminal[static_cast<std::size_t>(cur)] >= 0) return cur;
      }
    };
    for (int v = 0; v < nodes; ++v) {
      if (seen[static_cast<std::size_t>(v)] || terminal[static_cast<std::size_t>(v)] < 0) continue;
      bool flag = false;
      const int end = walk(v, flag);
      const int a = terminal[static_cast<std::size_t>(v)];
      const int b = terminal[static_cast<std::size_t>(end)];
      const std::uint8_t f = flag ? kFlag : 0;
      t.key[static_cast<std::size_t>(a)] = static_cast<std::uint8_t>(b) | f;
      t.key[static_cast<std::size_t>(b)] = static_cast<std::uint8_t>(a) | f;
    }
    for (int v = 0; v < nodes; ++v) {
      if (seen[static_cast<std::size_t>(v)] || terminal[static_cast<std::size_t>(v)] < 0) continue;
      bool flag = false;
      const int end = walk(v, flag);
      const int a = terminal[static_cast<std::size_t>(v)];
      const int b = terminal[static_cast<std::size_t>(end)];
      const std::uint8_t f = flag ? kFlag : 0;
      t.key[static_cast<std::size_t>(a)] = static_cast<std::uint8_t>(b) | f;
      t.key[static_cast<std::size_t>(b)] = static_cast<std::uint8_t>(a) | f;
    }
    for (int v = 0; v < nodes; ++v) {
      if (seen[static_cast<std::size_t>(v)] || nbr[static_cast<std::size_t>(v)][0].to < 0) continue;
      bool flag = false;
      walk(v, flag);
      if (!flag) ++t.loops;
    }
    return t;
  }

  const LongKnotDiagram& d_;
  std::vector<int> boundary_;
  std::unordered_map<Key, Poly, KeyHash> states_;
};

// Histogram hist[a * (c+1) + loops] of smoothings with `a` A-smoothings over
// the mask range [begin, end).
void enumerate_states(const LongKnotDiagram& d, std::uint64_t begin, std::uint64_t end,
                      std::vector<std::int64_t>& hist) {
  const int c = d.crossing_count();
  const int edges = 2 * c + 1;
  std::vector<int> parent(static_cast<std::size_t>(edges));
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (std::uint64_t mask = begin; mask < end; ++mask) {
    std::iota(parent.begin(), parent.end(), 0);
    int components = edges;
    auto unite = [&](int a, int b) {
      a = find(a);
      b = find(b);
      if (a != b) {
        parent[static_cast<std::size_t>(a)] = b;
        --components;
      }
    };
    int a_count = 0;
    for (int k = 0; k < c; ++k) {
      const auto& pd = d.crossings()[static_cast<std::size_t>(k)].pd;
      if ((mask >> k) & 1u) {
        unite(pd[0], pd[1]);
        unite(pd[2], pd[3]);
        ++a_count;
      } else {
        unite(pd[0], pd[3]);
        unite(pd[1], pd[2]);
      }
    }
    // the open component through both ends is not a loop
    hist[static_cast<std::size_t>(a_count * (c + 1) + components - 1)] += 1;
  }
}

}  // namespace

LaurentPoly kauffman_bracket(const LongKnotDiagram& d, int crossing_cap) {
  if (d.crossing_count() > crossing_cap) {
    throw ResourceError("diagram has " + std::to_string(d.crossing_count()) + " crossings, cap is " +
                        std::to_string(crossing_cap));
  }
  return BracketSweep(d).run();
}

LaurentPoly kauffman_bracket_exhaustive(const LongKnotDiagram& d, Execution exec) {
  const int c = d.crossing_count();
  if (c > kExhaustiveCrossingCap) {
    throw ResourceError("exhaustive state sum limited to " + std::to_string(kExhaustiveCrossingCap) + " crossings");
  }
  const std::uint64_t total = std::uint64_t{1} << c;
  const std::size_t bins = static_cast<std::size_t>(c + 1) * static_cast<std::size_t>(c + 1);
  std::vector<std::int64_t> hist(bins, 0);
  if (exec == Execution::serial) {
    enumerate_states(d, 0, total, hist);
  } else {
    // Contiguous mask blocks, one local histogram per block.
    const std::int64_t blocks = static_cast<std::int64_t>(std::min<std::uint64_t>(total, 256));
#pragma omp parallel
    {
      std::vector<std::int64_t> local(bins, 0);
#pragma omp for schedule(static)
      for (std::int64_t blk = 0; blk < blocks; ++blk) {
        const std::uint64_t lo = total * static_cast<std::uint64_t>(blk) / static_cast<std::uint64_t>(blocks);
        const std::uint64_t hi = total * static_cast<std::uint64_t>(blk + 1) / static_cast<std::uint64_t>(blocks);
        enumerate_states(d, lo, hi, local);
      }
#pragma omp critical
      for (std::size_t i = 0; i < bins; ++i) hist[i] += local[i];
    }
  }
  Poly out(Poly::Variable::A);
  for (int a = 0; a <= c; ++a) {
    for (int loops = 0; loops <= c; ++loops) {
      const std::int64_t n = hist[static_cast<std::size_t>(a * (c + 1) + loops)];
      if (n == 0) continue;
      out += delta_power(loops).shifted(a - (c - a)).scaled(n);
    }
  }
  return out;
}

LaurentPoly jones_from_bracket(const LaurentPoly& bracket, std::int64_t w) {
  LaurentPoly v(LaurentPoly::Variable::t);
  const std::int64_t sign = (w % 2 == 0) ? 1 : -1;
  for (const auto& [e, c] : bracket.terms()) {
    const std::int64_t shifted = e - 3 * w;
    if (shifted % 4 != 0) throw InternalError("bracket exponent not compatible with a knot");
    v.add_term(static_cast<int>(-shifted / 4), sign * c);
  }
  return v;
}

LaurentPoly jones(const LongKnotDiagram& d, int crossing_cap) {
  return jones_from_bracket(kauffman_bracket(d, crossing_cap), writhe(d));
}

// --- Gauss-diagram formulas --------------------------------------------------

namespace {

// A point of an arrow diagram: arrow index (by first appearance) and the
// over flag. Packed as 3 bits per point.
std::uint32_t pack_pattern(const std::vector<std::pair<int, bool>>& points) {
  std::uint32_t code = 0;
  for (auto [arrow, over] : points) code = (code << 3) | static_cast<std::uint32_t>(arrow << 1) | (over ? 1u : 0u);
  return code;
}

std::vector<std::pair<int, bool>> parse_pattern(std::string_view pattern) {
  std::vector<std::pair<int, bool>> raw;
  std::size_t i = 0;
  while (i < pattern.size()) {
    if (pattern[i] == ' ') {
      ++i;
      continue;
    }
    const char kind = pattern[i++];
    if (kind != 'O' && kind != 'U') throw ParseError("arrow diagram points are O<k> or U<k>", i - 1);
    int k = 0;
    const std::size_t start = i;
    while (i < pattern.size() && pattern[i] >= '0' && pattern[i] <= '9') k = k * 10 + (pattern[i++] - '0');
    if (i == start) throw ParseError("missing arrow index", start);
    raw.emplace_back(k, kind == 'O');
  }
  std::map<int, int> relabel;
  std::map<int, std::pair<int, int>> seen;
  std::vector<std::pair<int, bool>> out;
  for (auto [k, over] : raw) {
    auto [it, ins] = relabel.try_emplace(k, static_cast<int>(relabel.size()));
    auto& s = seen[k];
    (over ? s.first : s.second) += 1;
    out.emplace_back(it->second, over);
  }
  for (const auto& [k, s] : seen) {
    if (s.first != 1 || s.second != 1) throw ParseError("arrow " + std::to_string(k) + " needs one O and one U", 0);
  }
  if (relabel.size() > 4) throw DomainError("arrow diagrams with more than 4 arrows are not supported");
  return out;
}

// Sum over k-subsets of crossings of (sign product) * weight[pattern].
std::int64_t gauss_diagram_sum(const LongKnotDiagram& d, int k, const std::unordered_map<std::uint32_t, std::int64_t>& weight) {
  const auto& xs = d.crossings();
  const int c = d.crossing_count();
  if (k > c) return 0;
  std::int64_t total = 0;
  std::vector<int> pick(static_cast<std::size_t>(k));
  std::iota(pick.begin(), pick.end(), 0);
  std::vector<std::array<int, 3>> pts(static_cast<std::size_t>(2 * k));
  std::vector<std::pair<int, bool>> pattern(static_cast<std::size_t>(2 * k));
  while (true) {
    std::int64_t sign = 1;
    for (int a = 0; a < k; ++a) {
      const Crossing& x = xs[static_cast<std::size_t>(pick[static_cast<std::size_t>(a)])];
      pts[static_cast<std::size_t>(2 * a)] = {x.over_position, a, 1};
      pts[static_cast<std::size_t>(2 * a + 1)] = {x.under_position, a, 0};
      sign *= x.sign;
    }
    std::sort(pts.begin(), pts.end());
    std::array<int, 4> label{-1, -1, -1, -1};
    int next = 0;
    for (std::size_t p = 0; p < pts.size(); ++p) {
      auto& l = label[static_cast<std::size_t>(pts[p][1])];
      if (l < 0) l = next++;
      pattern[p] = {l, pts[p][2] == 1};
    }
    auto it = weight.find(pack_pattern(pattern));
    if (it != weight.end()) total += sign * it->second;

    int a = k - 1;
    while (a >= 0 && pick[static_cast<std::size_t>(a)] == c - k + a) --a;
    if (a < 0) break;
    ++pick[static_cast<std::size_t>(a)];
    for (int b = a + 1; b < k; ++b) pick[static_cast<std::size_t>(b)] = pick[static_cast<std::size_t>(b - 1)] + 1;
  }
  return total;
}

std::unordered_map<std::uint32_t, std::int64_t> weights_of(std::initializer_list<std::string_view> patterns) {
  std::unordered_map<std::uint32_t, std::int64_t> w;
  for (auto p : patterns) w[pack_pattern(parse_pattern(p))] += 1;
  return w;
}

}  // namespace

std::int64_t arrow_diagram_count(const LongKnotDiagram& d, std::string_view pattern) {
  const auto points = parse_pattern(pattern);
  std::unordered_map<std::uint32_t, std::int64_t> w{{pack_pattern(points), 1}};
  return gauss_diagram_sum(d, static_cast<int>(points.size() / 2), w);
}

std::int64_t casson_v2(const LongKnotDiagram& d) {
  static const auto w = weights_of({"U1 O2 O1 U2"});
  return gauss_diagram_sum(d, 2, w);
}

std::int64_t vassiliev_v3(const LongKnotDiagram& d) {
  static const auto w = weights_of({
      "U1 U2 O1 U3 O2 O3",
      "U1 O2 U3 O1 U2 O3",
      "O1 U2 U3 O2 U1 O3",
      "O1 U2 O3 U1 O2 U3",
      "O1 O2 U3 U1 O3 U2",
  });
  return gauss_diagram_sum(d, 3, w);
}

std::string Fingerprint::to_string() const {
  return "jones: " + jones.to_string() + ", v2: " + std::to_string(v2) + ", v3: " + std::to_string(v3);
}

Fingerprint fingerprint(const LongKnotDiagram& d, int crossing_cap) {
  const LongKnotDiagram s = simplify(d);
  return {jones(s, crossing_cap), casson_v2(s), vassiliev_v3(s)};
}

bool equal_up_to_mirror(const Fingerprint& a, const Fingerprint& b) { return a == b || a == b.mirrored(); }

}  // namespace scknot
