#include "imw/generate.hpp"

#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_set>

#include "imw/alpha.hpp"
#include "imw/canonical.hpp"

namespace imw {

namespace {

// Accept a child (parent + vertex z joined to an independent set) iff z is in
// the same automorphism orbit as the canonical deletion vertex, i.e. the one
// landing on the last position of the canonical labeling. Orbit membership is
// decided by comparing canonical codes with the candidate vertex marked.
bool augmentation_is_canonical(const Graph& child) {
  CanonResult cr = canonical_labeling(child);
  int z = child.vertex_count() - 1;
  int d = cr.labeling.back();
  if (z == d) return true;
  if (child.degree(z) != child.degree(d)) return false;

  // The searcher's discovered generators can settle membership cheaply.
  std::vector<int> root(static_cast<size_t>(child.vertex_count()));
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int a) {
    while (root[static_cast<size_t>(a)] != a) a = root[static_cast<size_t>(a)];
    return a;
  };
  for (const auto& sigma : cr.generators)
    for (int a = 0; a < child.vertex_count(); ++a) {
      int ra = find(a), rb = find(sigma[static_cast<size_t>(a)]);
      if (ra != rb) root[static_cast<size_t>(ra)] = rb;
    }
  if (find(z) == find(d)) return true;

  std::vector<int> colors(static_cast<size_t>(child.vertex_count()), 1);
  colors[static_cast<size_t>(z)] = 0;
  CanonCode with_z = canonical_labeling(child, colors).code;
  colors[static_cast<size_t>(z)] = 1;
  colors[static_cast<size_t>(d)] = 0;
  CanonCode with_d = canonical_labeling(child, colors).code;
  return with_z == with_d;
}

}  // namespace

std::vector<Graph> enumerate_triangle_free(int n, int max_n) {
  if (n < 1 || n > max_n)
    throw std::invalid_argument("enumerate_triangle_free: n out of range [1," +
                                std::to_string(max_n) + "]");
  if (n > kMaxVertices)
    throw std::invalid_argument("enumerate_triangle_free: n exceeds vertex limit");

  std::vector<Graph> level{Graph(1)};
  for (int k = 1; k < n; ++k) {
    std::vector<Graph> next;
    for (const Graph& parent : level) {
      std::unordered_set<CanonCode, CanonCodeHash> emitted_here;
      std::uint64_t all = parent.all_vertices_bits();
      for (std::uint64_t s = 0;; ++s) {
        if (s > all) break;
        if ((s & all) != s) continue;
        if (!is_independent(parent, s)) continue;  // triangle through z otherwise
        Graph child(k + 1);
        for (auto [u, v] : parent.edges()) child.add_edge(u, v);
        for_each_bit(s, [&](int v) { child.add_edge(v, k); });
        if (!augmentation_is_canonical(child)) continue;
        // Two augmentation sets in the same Aut(parent) orbit produce the
        // same child class; keep one per parent.
        if (!emitted_here.insert(canon_code(child)).second) continue;
        next.push_back(std::move(child));
      }
    }
    level = std::move(next);
  }
  return level;
}

void enumerate_triangle_free(int n, const std::function<void(const Graph&)>& emit, int max_n) {
  for (const Graph& g : enumerate_triangle_free(n, max_n)) emit(g);
}

std::vector<Graph> enumerate_alpha2(int n, bool exact, int max_n) {
  std::vector<Graph> out;
  for (const Graph& g : enumerate_triangle_free(n, max_n)) {
    if (exact && g.edge_count() == 0) continue;  // complement would be complete
    out.push_back(complement(g));
  }
  return out;
}

Graph alpha_critical_reduce(const Graph& g) {
  Graph cur = g;
  int alpha = independence_number(cur);
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [u, v] : cur.edges()) {
      Graph h = cur;
      h.remove_edge(u, v);
      if (independence_number(h) == alpha) {
        cur = std::move(h);
        changed = true;
        break;
      }
    }
  }
  return cur;
}

Graph random_alpha2(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_alpha2: n must be positive");
  if (n > kMaxVertices) throw std::invalid_argument("random_alpha2: n exceeds vertex limit");
  std::mt19937_64 rng(seed ^ (static_cast<std::uint64_t>(n) << 32));
  Graph tf(n);
  for (;;) {
    std::vector<std::pair<int, int>> candidates;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        if (tf.has_edge(u, v)) continue;
        if (tf.neighbor_bits(u) & tf.neighbor_bits(v)) continue;  // would close a triangle
        candidates.emplace_back(u, v);
      }
    if (candidates.empty()) break;
    auto [u, v] = candidates[static_cast<size_t>(rng() % candidates.size())];
    tf.add_edge(u, v);
  }
  return complement(tf);
}

}  // namespace imw
