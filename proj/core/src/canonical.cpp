#include "imw/canonical.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <numeric>

namespace imw {

size_t CanonCodeHash::operator()(const CanonCode& c) const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint64_t x) {
    h ^= x;
    h *= 1099511628211ull;
  };
  mix(static_cast<std::uint64_t>(c.n));
  for (std::uint64_t w : c.words) mix(w);
  return static_cast<size_t>(h);
}

CanonCode encode_with_labeling(const Graph& g, std::span<const int> labeling) {
  int n = g.vertex_count();
  assert(static_cast<int>(labeling.size()) == n);
  CanonCode code;
  code.n = n;
  code.words.assign(static_cast<size_t>(n * (n - 1) / 2 + 63) / 64, 0);
  int bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if (g.has_edge(labeling[static_cast<size_t>(i)], labeling[static_cast<size_t>(j)]))
        code.words[static_cast<size_t>(bit >> 6)] |= 1ull << (63 - (bit & 63));
  return code;
}

namespace {

using Partition = std::vector<std::vector<int>>;

std::uint64_t cell_mask(const std::vector<int>& cell) {
  std::uint64_t m = 0;
  for (int v : cell) m |= 1ull << v;
  return m;
}

// Equitable refinement: split cells by neighbor counts into splitter sets
// until stable. Cell order and split order depend only on partition
// structure, so the result commutes with relabeling.
void refine(const Graph& g, Partition& cells, std::deque<std::uint64_t> splitters) {
  while (!splitters.empty()) {
    std::uint64_t s = splitters.front();
    splitters.pop_front();
    for (size_t ci = 0; ci < cells.size(); ++ci) {
      if (cells[ci].size() <= 1) continue;
      std::map<int, std::vector<int>> groups;  // count -> vertices, ascending count
      for (int v : cells[ci]) groups[std::popcount(g.neighbor_bits(v) & s)].push_back(v);
      if (groups.size() == 1) continue;
      Partition repl;
      repl.reserve(groups.size());
      for (auto& [cnt, vs] : groups) repl.push_back(std::move(vs));
      cells.erase(cells.begin() + static_cast<long>(ci));
      cells.insert(cells.begin() + static_cast<long>(ci), repl.begin(), repl.end());
      for (const auto& cell : repl) splitters.push_back(cell_mask(cell));
      ci += repl.size() - 1;
    }
  }
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int a) {
    while (parent[static_cast<size_t>(a)] != a) {
      parent[static_cast<size_t>(a)] = parent[static_cast<size_t>(parent[static_cast<size_t>(a)])];
      a = parent[static_cast<size_t>(a)];
    }
    return a;
  }
  void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

struct CanonSearcher {
  const Graph& g;
  int n;
  bool have_best = false;
  CanonCode best_code;
  std::vector<int> best_leaf;
  std::vector<int> best_leaf_path;
  std::vector<std::vector<int>> generators;
  std::vector<int> path;
  int unwind_to = -1;

  explicit CanonSearcher(const Graph& graph) : g(graph), n(graph.vertex_count()) {}

  bool orbit_pruned(int v, const std::vector<int>& tried) {
    if (tried.empty() || generators.empty()) return false;
    UnionFind uf(n);
    for (const auto& sigma : generators) {
      bool fixes_path = true;
      for (int p : path)
        if (sigma[static_cast<size_t>(p)] != p) {
          fixes_path = false;
          break;
        }
      if (!fixes_path) continue;
      for (int a = 0; a < n; ++a) uf.unite(a, sigma[static_cast<size_t>(a)]);
    }
    int rv = uf.find(v);
    for (int u : tried)
      if (uf.find(u) == rv) return true;
    return false;
  }

  void leaf(const Partition& cells) {
    std::vector<int> lab;
    lab.reserve(static_cast<size_t>(n));
    for (const auto& cell : cells) lab.push_back(cell[0]);
    CanonCode code = encode_with_labeling(g, lab);
    if (!have_best || code < best_code) {
      best_code = std::move(code);
      best_leaf = lab;
      best_leaf_path = path;
      have_best = true;
      return;
    }
    if (code == best_code) {
      // Two equal leaves give the automorphism lab[i] -> best_leaf[i]. Every
      // leaf below the first point where this path left the best leaf's path
      // is mirrored under the earlier branch, so jump back there.
      std::vector<int> sigma(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i)
        sigma[static_cast<size_t>(lab[static_cast<size_t>(i)])] = best_leaf[static_cast<size_t>(i)];
      generators.push_back(std::move(sigma));
      size_t d = 0;
      while (d < path.size() && d < best_leaf_path.size() && path[d] == best_leaf_path[d]) ++d;
      if (d < path.size()) unwind_to = static_cast<int>(d);
    }
  }

  void dfs(Partition cells) {
    size_t ci = 0;
    while (ci < cells.size() && cells[ci].size() == 1) ++ci;
    if (ci == cells.size()) {
      leaf(cells);
      return;
    }
    std::vector<int> cell = cells[ci];
    std::vector<int> tried;
    for (int v : cell) {
      if (orbit_pruned(v, tried)) continue;
      Partition child = cells;
      std::vector<int> rest;
      rest.reserve(cell.size() - 1);
      for (int u : cell)
        if (u != v) rest.push_back(u);
      child[ci] = {v};
      child.insert(child.begin() + static_cast<long>(ci) + 1, rest);
      std::deque<std::uint64_t> splitters{1ull << v, cell_mask(rest)};
      refine(g, child, std::move(splitters));

      path.push_back(v);
      dfs(std::move(child));
      path.pop_back();

      if (unwind_to != -1) {
        if (unwind_to < static_cast<int>(path.size())) return;
        unwind_to = -1;
      }
      tried.push_back(v);
    }
  }

  CanonResult run(Partition initial) {
    if (n == 0) return {CanonCode{0, {}}, {}, {}};
    std::deque<std::uint64_t> splitters;
    for (const auto& cell : initial) splitters.push_back(cell_mask(cell));
    refine(g, initial, std::move(splitters));
    dfs(std::move(initial));
    assert(have_best);
    return {std::move(best_code), std::move(best_leaf), std::move(generators)};
  }
};

}  // namespace

CanonResult canonical_labeling(const Graph& g) {
  Partition initial;
  if (g.vertex_count() > 0) {
    std::vector<int> all(static_cast<size_t>(g.vertex_count()));
    std::iota(all.begin(), all.end(), 0);
    initial.push_back(std::move(all));
  }
  return CanonSearcher(g).run(std::move(initial));
}

CanonResult canonical_labeling(const Graph& g, std::span<const int> colors) {
  assert(static_cast<int>(colors.size()) == g.vertex_count());
  std::map<int, std::vector<int>> by_color;
  for (int v = 0; v < g.vertex_count(); ++v) by_color[colors[static_cast<size_t>(v)]].push_back(v);
  Partition initial;
  for (auto& [c, vs] : by_color) initial.push_back(std::move(vs));
  return CanonSearcher(g).run(std::move(initial));
}

CanonCode canon_code(const Graph& g) { return canonical_labeling(g).code; }

Graph canonical_form(const Graph& g) {
  CanonResult r = canonical_labeling(g);
  std::vector<int> old_to_new(static_cast<size_t>(g.vertex_count()));
  for (int pos = 0; pos < g.vertex_count(); ++pos)
    old_to_new[static_cast<size_t>(r.labeling[static_cast<size_t>(pos)])] = pos;
  return relabel(g, old_to_new);
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  return canon_code(a) == canon_code(b);
}

namespace {

bool extend_subgraph_map(const Graph& h, const Graph& g, std::vector<int>& map,
                         std::uint64_t& used, int next) {
  if (next == h.vertex_count()) return true;
  std::uint64_t candidates = g.all_vertices_bits() & ~used;
  // Every already-mapped h-neighbor pins the candidate to a g-neighborhood.
  for_each_bit(h.neighbor_bits(next), [&](int hv) {
    if (hv < next) candidates &= g.neighbor_bits(map[static_cast<size_t>(hv)]);
  });
  bool found = false;
  for_each_bit(candidates, [&](int gv) {
    if (found) return;
    if (g.degree(gv) < h.degree(next)) return;
    map[static_cast<size_t>(next)] = gv;
    used |= 1ull << gv;
    if (extend_subgraph_map(h, g, map, used, next + 1)) found = true;
    used &= ~(1ull << gv);
  });
  return found;
}

}  // namespace

bool is_subgraph_of(const Graph& h, const Graph& g) {
  if (h.vertex_count() > g.vertex_count() || h.edge_count() > g.edge_count()) return false;
  std::vector<int> map(static_cast<size_t>(h.vertex_count()), -1);
  std::uint64_t used = 0;
  return extend_subgraph_map(h, g, map, used, 0);
}

}  // namespace imw
