#include "imw/solver.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <numeric>

namespace imw {

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Found: return "found";
    case SolveStatus::NotFound: return "not_found";
    case SolveStatus::Undecided: return "undecided";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

struct Budget {
  std::uint64_t max_nodes;
  Clock::time_point deadline;
  bool has_deadline;
  std::uint64_t nodes = 0;
  bool exceeded = false;

  explicit Budget(const SolveLimits& limits)
      : max_nodes(limits.max_nodes),
        deadline(Clock::now() + std::chrono::milliseconds(limits.max_millis)),
        has_deadline(limits.max_millis > 0) {}

  // Returns true when the budget is gone.
  bool tick() {
    if (exceeded) return true;
    ++nodes;
    if (nodes > max_nodes) exceeded = true;
    if (has_deadline && (nodes & 0xfff) == 0 && Clock::now() > deadline) exceeded = true;
    return exceeded;
  }
};

// Exact edge-disjoint path packing between fixed terminal pairs.
// Backtracks over pairs ordered by scarcity, enumerating each pair's simple
// paths shortest-first (ties in lexicographic vertex order, so results are
// deterministic).
struct PathPacker {
  const Graph& g;
  Budget& budget;
  int n;
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::vector<int>> walks;
  std::vector<char> routed;
  std::vector<std::uint64_t> used;  // used[u] has bit v when edge uv is consumed

  PathPacker(const Graph& graph, Budget& b, std::vector<std::pair<int, int>> terminal_pairs)
      : g(graph),
        budget(b),
        n(graph.vertex_count()),
        pairs(std::move(terminal_pairs)),
        walks(pairs.size()),
        routed(pairs.size(), 0),
        used(static_cast<size_t>(n), 0) {}

  std::uint64_t residual_bits(int v) const {
    return g.neighbor_bits(v) & ~used[static_cast<size_t>(v)];
  }

  void mark(const std::vector<int>& walk, bool on) {
    for (size_t k = 0; k + 1 < walk.size(); ++k) {
      std::uint64_t bu = 1ull << walk[k + 1];
      std::uint64_t bv = 1ull << walk[k];
      if (on) {
        used[static_cast<size_t>(walk[k])] |= bu;
        used[static_cast<size_t>(walk[k + 1])] |= bv;
      } else {
        used[static_cast<size_t>(walk[k])] &= ~bu;
        used[static_cast<size_t>(walk[k + 1])] &= ~bv;
      }
    }
  }

  std::vector<int> residual_distances(int from) const {
    std::vector<int> dist(static_cast<size_t>(n), -1);
    dist[static_cast<size_t>(from)] = 0;
    std::vector<int> queue{from};
    for (size_t head = 0; head < queue.size(); ++head) {
      int v = queue[head];
      for_each_bit(residual_bits(v), [&](int to) {
        if (dist[static_cast<size_t>(to)] == -1) {
          dist[static_cast<size_t>(to)] = dist[static_cast<size_t>(v)] + 1;
          queue.push_back(to);
        }
      });
    }
    return dist;
  }

  // Unit-capacity max flow from `src` to the sink set (each sink accepts one
  // unit); stops once `demand` units are placed. Menger: an upper bound on
  // how many edge-disjoint paths can still leave src for those partners.
  int flow_value(int src, const std::vector<int>& sinks, int demand) {
    std::vector<std::uint64_t> cap(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) cap[static_cast<size_t>(v)] = residual_bits(v);
    std::vector<char> sink_open(static_cast<size_t>(n), 0);
    for (int s : sinks) sink_open[static_cast<size_t>(s)] = 1;
    int flow = 0;
    std::vector<int> prev(static_cast<size_t>(n));
    while (flow < demand) {
      std::fill(prev.begin(), prev.end(), -2);
      prev[static_cast<size_t>(src)] = -1;
      std::vector<int> queue{src};
      int reached = -1;
      for (size_t head = 0; head < queue.size() && reached == -1; ++head) {
        int v = queue[head];
        if (sink_open[static_cast<size_t>(v)] && v != src) {
          reached = v;
          break;
        }
        for_each_bit(cap[static_cast<size_t>(v)], [&](int to) {
          if (prev[static_cast<size_t>(to)] == -2) {
            prev[static_cast<size_t>(to)] = v;
            queue.push_back(to);
          }
        });
      }
      if (reached == -1) break;
      sink_open[static_cast<size_t>(reached)] = 0;
      for (int v = reached; prev[static_cast<size_t>(v)] != -1; v = prev[static_cast<size_t>(v)]) {
        int p = prev[static_cast<size_t>(v)];
        cap[static_cast<size_t>(p)] &= ~(1ull << v);   // consume p->v
        cap[static_cast<size_t>(v)] |= 1ull << p;      // allow cancellation
      }
      ++flow;
    }
    return flow;
  }

  bool feasible() {
    // Per branch vertex: enough edge capacity toward the unrouted partners.
    std::vector<std::vector<int>> partners(static_cast<size_t>(n));
    for (size_t i = 0; i < pairs.size(); ++i) {
      if (routed[i]) continue;
      partners[static_cast<size_t>(pairs[i].first)].push_back(pairs[i].second);
      partners[static_cast<size_t>(pairs[i].second)].push_back(pairs[i].first);
    }
    for (int v = 0; v < n; ++v) {
      int demand = static_cast<int>(partners[static_cast<size_t>(v)].size());
      if (demand == 0) continue;
      if (std::popcount(residual_bits(v)) < demand) return false;
      if (flow_value(v, partners[static_cast<size_t>(v)], demand) < demand) return false;
    }
    return true;
  }

  // Number of residual simple paths of length <= 3 between a and b, capped.
  int short_path_count(int a, int b) const {
    constexpr int kCap = 64;
    int count = 0;
    std::uint64_t ra = residual_bits(a);
    std::uint64_t rb = residual_bits(b);
    if (ra >> b & 1) ++count;
    count += std::popcount(ra & rb);
    std::uint64_t mid = ra & ~(1ull << b);
    for_each_bit(mid, [&](int x) {
      if (count >= kCap) return;
      count += std::popcount(residual_bits(x) & rb & ~(1ull << a) & ~(1ull << x) & ~ra);
    });
    return std::min(count, kCap);
  }

  // Enumerate simple residual paths from cur to target with exactly
  // `remaining` more edges, ascending neighbor order. Returns true when the
  // continuation succeeded (found a full packing).
  bool extend_path(std::vector<int>& walk, std::uint64_t visited, int target, int remaining,
                   const std::vector<int>& dist_to_target, size_t pair_index) {
    if (budget.tick()) return false;
    int cur = walk.back();
    if (remaining == 0) return false;  // handled by caller
    std::uint64_t next = residual_bits(cur) & ~visited;
    bool done = false;
    for_each_bit(next, [&](int v) {
      if (done || budget.exceeded) return;
      if (remaining == 1) {
        if (v != target) return;
      } else {
        if (v == target) return;  // would arrive early; longer variants come later
        int d = dist_to_target[static_cast<size_t>(v)];
        if (d == -1 || d > remaining - 1) return;
      }
      walk.push_back(v);
      if (v == target) {
        if (route_found(pair_index, walk)) done = true;
      } else if (extend_path(walk, visited | (1ull << v), target, remaining - 1, dist_to_target,
                             pair_index)) {
        done = true;
      }
      walk.pop_back();
    });
    return done;
  }

  bool route_found(size_t pair_index, const std::vector<int>& walk) {
    mark(walk, true);
    walks[pair_index] = walk;
    routed[pair_index] = 1;
    bool ok = solve();
    if (!ok) {
      routed[pair_index] = 0;
      mark(walk, false);
    }
    return ok;
  }

  bool solve() {
    if (budget.tick()) return false;
    size_t pick = pairs.size();
    int best_score = 0;
    for (size_t i = 0; i < pairs.size(); ++i) {
      if (routed[i]) continue;
      int score = short_path_count(pairs[i].first, pairs[i].second);
      if (pick == pairs.size() || score < best_score) {
        pick = i;
        best_score = score;
      }
    }
    if (pick == pairs.size()) return true;  // everything routed
    if (!feasible()) return false;

    auto [a, b] = pairs[pick];
    std::vector<int> dist_to_target = residual_distances(b);
    if (dist_to_target[static_cast<size_t>(a)] == -1) return false;
    std::vector<int> walk{a};
    for (int len = dist_to_target[static_cast<size_t>(a)]; len < n; ++len) {
      if (extend_path(walk, 1ull << a, b, len, dist_to_target, pick)) return true;
      if (budget.exceeded) return false;
    }
    return false;
  }
};

struct OuterResult {
  bool found = false;
  ImmersionCertificate certificate;
};

// Packs paths for a fully chosen branch map. `pair_keys` lists the h-edges in
// output order; terminal pairs are their branch images.
bool pack_for_branch(const Graph& g, Budget& budget, const std::vector<int>& branch,
                     const std::vector<std::pair<int, int>>& h_edges, OuterResult& out) {
  std::vector<std::pair<int, int>> terminals;
  terminals.reserve(h_edges.size());
  for (auto [hu, hv] : h_edges)
    terminals.emplace_back(branch[static_cast<size_t>(hu)], branch[static_cast<size_t>(hv)]);
  PathPacker packer(g, budget, terminals);
  if (!packer.solve()) return false;
  out.found = true;
  out.certificate.branch = branch;
  out.certificate.paths.clear();
  for (size_t i = 0; i < h_edges.size(); ++i)
    out.certificate.paths.push_back({h_edges[i], packer.walks[i]});
  return true;
}

// ---- generic targets -------------------------------------------------------

struct GenericSearch {
  const Graph& g;
  const Graph& h;
  Budget& budget;
  std::vector<std::pair<int, int>> h_edges;
  std::vector<int> order;   // h-vertices, highest degree first
  std::vector<int> branch;  // h-vertex -> g-vertex
  std::uint64_t used = 0;
  OuterResult result;

  GenericSearch(const Graph& gg, const Graph& hh, Budget& b) : g(gg), h(hh), budget(b) {
    h_edges = h.edges();
    order.resize(static_cast<size_t>(h.vertex_count()));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
      if (h.degree(x) != h.degree(y)) return h.degree(x) > h.degree(y);
      return x < y;
    });
    branch.assign(static_cast<size_t>(h.vertex_count()), -1);
  }

  bool assign(size_t idx) {
    if (budget.tick()) return false;
    if (idx == order.size()) return pack_for_branch(g, budget, branch, h_edges, result);
    int hv = order[idx];
    bool done = false;
    for_each_bit(g.all_vertices_bits() & ~used, [&](int gv) {
      if (done || budget.exceeded) return;
      if (g.degree(gv) < h.degree(hv)) return;
      branch[static_cast<size_t>(hv)] = gv;
      used |= 1ull << gv;
      if (assign(idx + 1)) done = true;
      used &= ~(1ull << gv);
    });
    if (!done) branch[static_cast<size_t>(order[idx])] = -1;
    return done;
  }
};

SolveResult finish(Budget& budget, const OuterResult& outer) {
  SolveResult r;
  r.nodes = budget.nodes;
  if (outer.found) {
    r.status = SolveStatus::Found;
    r.certificate = outer.certificate;
  } else if (budget.exceeded) {
    r.status = SolveStatus::Undecided;
  } else {
    r.status = SolveStatus::NotFound;
  }
  return r;
}

// ---- two-part targets ------------------------------------------------------

// Shared engine for K_{s,t}, K_k and K^m_{m,t}: part one (size s1, optionally
// a clique internally) complete to part two (size s2, independent).
struct TwoPartSearch {
  const Graph& g;
  Budget& budget;
  int s1, s2;
  bool clique_side;
  std::vector<std::pair<int, int>> h_edges;
  OuterResult result;

  TwoPartSearch(const Graph& gg, Budget& b, int part1, bool part1_clique, int part2)
      : g(gg), budget(b), s1(part1), s2(part2), clique_side(part1_clique) {
    if (clique_side)
      for (int i = 0; i < s1; ++i)
        for (int j = i + 1; j < s1; ++j) h_edges.emplace_back(i, j);
    for (int i = 0; i < s1; ++i)
      for (int j = 0; j < s2; ++j) h_edges.emplace_back(i, s1 + j);
  }

  bool quotient_swap() const { return !clique_side && s1 == s2 && s2 > 0; }

  bool run() {
    int n = g.vertex_count();
    if (s1 + s2 > n) return false;
    std::vector<int> side_a, side_b_candidates;
    int need_a = s2 + (clique_side ? s1 - 1 : 0);
    for (int v = 0; v < n; ++v) {
      if (g.degree(v) >= need_a) side_a.push_back(v);
      if (g.degree(v) >= s1) side_b_candidates.push_back(v);
    }
    std::vector<int> a_pick;
    return choose_a(side_a, 0, a_pick, side_b_candidates);
  }

  bool choose_a(const std::vector<int>& cand, size_t from, std::vector<int>& picked,
                const std::vector<int>& b_candidates) {
    if (budget.tick()) return false;
    if (static_cast<int>(picked.size()) == s1) {
      std::vector<int> b_pick;
      return choose_b(b_candidates, 0, picked, b_pick);
    }
    for (size_t i = from; i < cand.size(); ++i) {
      picked.push_back(cand[i]);
      if (choose_a(cand, i + 1, picked, b_candidates)) return true;
      picked.pop_back();
      if (budget.exceeded) return false;
    }
    return false;
  }

  bool choose_b(const std::vector<int>& cand, size_t from, const std::vector<int>& a_pick,
                std::vector<int>& b_pick) {
    if (budget.tick()) return false;
    if (static_cast<int>(b_pick.size()) == s2) {
      std::vector<int> branch;
      branch.reserve(a_pick.size() + b_pick.size());
      branch.insert(branch.end(), a_pick.begin(), a_pick.end());
      branch.insert(branch.end(), b_pick.begin(), b_pick.end());
      return pack_for_branch(g, budget, branch, h_edges, result);
    }
    for (size_t i = from; i < cand.size(); ++i) {
      int v = cand[i];
      bool in_a = std::find(a_pick.begin(), a_pick.end(), v) != a_pick.end();
      if (in_a) continue;
      if (quotient_swap() && b_pick.empty() && v < a_pick.front()) continue;
      b_pick.push_back(v);
      if (choose_b(cand, i + 1, a_pick, b_pick)) return true;
      b_pick.pop_back();
      if (budget.exceeded) return false;
    }
    return false;
  }
};

}  // namespace

SolveResult find_immersion(const Graph& g, const Graph& h, const SolveLimits& limits) {
  Budget budget(limits);
  if (h.vertex_count() > g.vertex_count()) {
    OuterResult none;
    return finish(budget, none);
  }
  GenericSearch search(g, h, budget);
  search.assign(0);
  return finish(budget, search.result);
}

SolveResult find_kst_immersion(const Graph& g, int s, int t, const SolveLimits& limits) {
  if (s < 1 || t < 1) throw std::invalid_argument("find_kst_immersion: parts must be positive");
  Budget budget(limits);
  TwoPartSearch search(g, budget, s, false, t);
  search.run();
  return finish(budget, search.result);
}

SolveResult find_clique_immersion(const Graph& g, int k, const SolveLimits& limits) {
  if (k < 1) throw std::invalid_argument("find_clique_immersion: size must be positive");
  Budget budget(limits);
  TwoPartSearch search(g, budget, k, true, 0);
  search.run();
  return finish(budget, search.result);
}

SolveResult find_clique_topped_immersion(const Graph& g, int m, int t,
                                         const SolveLimits& limits) {
  if (m < 1 || t < 1)
    throw std::invalid_argument("find_clique_topped_immersion: parts must be positive");
  Budget budget(limits);
  TwoPartSearch search(g, budget, m, true, t);
  search.run();
  return finish(budget, search.result);
}

SolveResult find_target_immersion(const Graph& g, const TargetSpec& target,
                                  const SolveLimits& limits) {
  switch (target.kind) {
    case TargetSpec::Kind::Clique: return find_clique_immersion(g, target.a, limits);
    case TargetSpec::Kind::CompleteBipartite:
      return find_kst_immersion(g, target.a, target.b, limits);
    case TargetSpec::Kind::CliqueToppedBipartite:
      return find_clique_topped_immersion(g, target.a, target.b, limits);
    case TargetSpec::Kind::Explicit: return find_immersion(g, *target.explicit_graph, limits);
  }
  throw std::invalid_argument("find_target_immersion: bad target kind");
}

}  // namespace imw
