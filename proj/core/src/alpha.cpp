#include "imw/alpha.hpp"

#include <algorithm>
#include <array>

#include "imw/matching.hpp"

namespace imw {

namespace {

struct CliqueSearch {
  const Graph& g;
  int best = 0;

  // Greedy coloring of the candidate set; vertices come back grouped by
  // color so the caller can prune with size + color <= best.
  void expand(std::uint64_t cand, int size) {
    best = std::max(best, size);
    if (!cand) return;

    std::array<int, kMaxVertices> order{};
    std::array<int, kMaxVertices> bound{};
    int cnt = 0;
    std::uint64_t uncolored = cand;
    int color = 0;
    while (uncolored) {
      ++color;
      std::uint64_t cls = uncolored;
      while (cls) {
        int v = std::countr_zero(cls);
        cls &= ~g.neighbor_bits(v);  // same class stays pairwise non-adjacent
        cls &= ~(1ull << v);
        uncolored &= ~(1ull << v);
        order[cnt] = v;
        bound[cnt] = color;
        ++cnt;
      }
    }
    for (int i = cnt - 1; i >= 0; --i) {
      if (size + bound[i] <= best) return;
      int v = order[i];
      cand &= ~(1ull << v);
      expand(cand & g.neighbor_bits(v), size + 1);
    }
  }
};

}  // namespace

int max_clique_size(const Graph& g) {
  if (g.vertex_count() == 0) return 0;
  CliqueSearch s{g};
  s.expand(g.all_vertices_bits(), 0);
  return s.best;
}

int independence_number(const Graph& g) { return max_clique_size(complement(g)); }

int chromatic_number_alpha2(const Graph& g) {
  if (independence_number(g) > 2)
    throw std::invalid_argument("chromatic_number_alpha2: alpha(g) > 2");
  return g.vertex_count() - max_matching(complement(g));
}

bool is_alpha_critical(const Graph& g) {
  int alpha = independence_number(g);
  for (auto [u, v] : g.edges()) {
    Graph h = g;
    h.remove_edge(u, v);
    if (independence_number(h) <= alpha) return false;
  }
  return true;
}

}  // namespace imw
