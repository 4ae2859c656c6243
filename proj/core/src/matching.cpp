#include "imw/matching.hpp"

#include <algorithm>
#include <numeric>

namespace imw {

namespace {

// Classic O(V^3) blossom implementation: alternating BFS from each free
// vertex, contracting odd cycles through their base vertex.
struct BlossomMatcher {
  const Graph& g;
  int n;
  std::vector<int> match, parent, base;
  std::vector<char> used, in_blossom;
  std::vector<int> queue;

  explicit BlossomMatcher(const Graph& graph)
      : g(graph),
        n(graph.vertex_count()),
        match(static_cast<size_t>(n), -1),
        parent(static_cast<size_t>(n), -1),
        base(static_cast<size_t>(n)),
        used(static_cast<size_t>(n), 0),
        in_blossom(static_cast<size_t>(n), 0) {}

  int lowest_common_base(int a, int b) {
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (;;) {
      a = base[static_cast<size_t>(a)];
      seen[static_cast<size_t>(a)] = 1;
      if (match[static_cast<size_t>(a)] == -1) break;
      a = parent[static_cast<size_t>(match[static_cast<size_t>(a)])];
    }
    for (;;) {
      b = base[static_cast<size_t>(b)];
      if (seen[static_cast<size_t>(b)]) return b;
      b = parent[static_cast<size_t>(match[static_cast<size_t>(b)])];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base[static_cast<size_t>(v)] != b) {
      int mv = match[static_cast<size_t>(v)];
      in_blossom[static_cast<size_t>(base[static_cast<size_t>(v)])] = 1;
      in_blossom[static_cast<size_t>(base[static_cast<size_t>(mv)])] = 1;
      parent[static_cast<size_t>(v)] = child;
      child = mv;
      v = parent[static_cast<size_t>(mv)];
    }
  }

  // Returns a free vertex reachable by an alternating path from root, or -1.
  int find_augmenting_path(int root) {
    std::fill(used.begin(), used.end(), 0);
    std::fill(parent.begin(), parent.end(), -1);
    std::iota(base.begin(), base.end(), 0);
    used[static_cast<size_t>(root)] = 1;
    queue.clear();
    queue.push_back(root);
    for (size_t head = 0; head < queue.size(); ++head) {
      int v = queue[head];
      std::uint64_t nb = g.neighbor_bits(v);
      while (nb) {
        int to = std::countr_zero(nb);
        nb &= nb - 1;
        if (base[static_cast<size_t>(v)] == base[static_cast<size_t>(to)] ||
            match[static_cast<size_t>(v)] == to)
          continue;
        if (to == root ||
            (match[static_cast<size_t>(to)] != -1 &&
             parent[static_cast<size_t>(match[static_cast<size_t>(to)])] != -1)) {
          // Odd cycle: contract the blossom at its base.
          int cur_base = lowest_common_base(v, to);
          std::fill(in_blossom.begin(), in_blossom.end(), 0);
          mark_path(v, cur_base, to);
          mark_path(to, cur_base, v);
          for (int i = 0; i < n; ++i)
            if (in_blossom[static_cast<size_t>(base[static_cast<size_t>(i)])]) {
              base[static_cast<size_t>(i)] = cur_base;
              if (!used[static_cast<size_t>(i)]) {
                used[static_cast<size_t>(i)] = 1;
                queue.push_back(i);
              }
            }
        } else if (parent[static_cast<size_t>(to)] == -1) {
          parent[static_cast<size_t>(to)] = v;
          if (match[static_cast<size_t>(to)] == -1) return to;
          int mt = match[static_cast<size_t>(to)];
          used[static_cast<size_t>(mt)] = 1;
          queue.push_back(mt);
        }
      }
    }
    return -1;
  }

  void augment(int v) {
    while (v != -1) {
      int pv = parent[static_cast<size_t>(v)];
      int next = match[static_cast<size_t>(pv)];
      match[static_cast<size_t>(v)] = pv;
      match[static_cast<size_t>(pv)] = v;
      v = next;
    }
  }

  std::vector<int> solve() {
    for (int v = 0; v < n; ++v)
      if (match[static_cast<size_t>(v)] == -1) {
        int leaf = find_augmenting_path(v);
        if (leaf != -1) augment(leaf);
      }
    return match;
  }
};

}  // namespace

std::vector<int> max_matching_mates(const Graph& g) { return BlossomMatcher(g).solve(); }

int max_matching(const Graph& g) {
  auto mates = max_matching_mates(g);
  int matched = 0;
  for (int v : mates)
    if (v != -1) ++matched;
  return matched / 2;
}

}  // namespace imw
