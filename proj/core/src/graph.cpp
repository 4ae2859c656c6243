#include "imw/graph.hpp"

#include <algorithm>
#include <cassert>

namespace imw {

int VertexSet::check_universe(int n) {
  if (n < 0 || n > kMaxVertices)
    throw std::invalid_argument("VertexSet universe out of range: " + std::to_string(n));
  return n;
}

VertexSet VertexSet::from_bits(int universe, std::uint64_t bits) {
  VertexSet s(universe);
  std::uint64_t all = universe == 0 ? 0 : ((1ull << universe) - 1);
  if (bits & ~all) throw std::invalid_argument("VertexSet bits outside universe");
  s.bits_ = bits;
  return s;
}

VertexSet VertexSet::full(int universe) {
  VertexSet s(universe);
  s.bits_ = universe == 0 ? 0 : ((1ull << universe) - 1);
  return s;
}

void VertexSet::add(int v) {
  if (!in_range(v)) throw std::invalid_argument("VertexSet::add: vertex out of range");
  bits_ |= 1ull << v;
}

void VertexSet::remove(int v) {
  if (!in_range(v)) throw std::invalid_argument("VertexSet::remove: vertex out of range");
  bits_ &= ~(1ull << v);
}

VertexSet VertexSet::complement_in_universe() const {
  return with_bits(~bits_ & (universe_ == 0 ? 0 : (1ull << universe_) - 1));
}

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  out.reserve(size());
  for_each_bit(bits_, [&](int v) { out.push_back(v); });
  return out;
}

int VertexSet::min_element() const { return bits_ ? std::countr_zero(bits_) : -1; }

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices)
    throw std::invalid_argument("Graph vertex count out of range: " + std::to_string(n));
  rows_.assign(static_cast<size_t>(n), 0);
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
  return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

void Graph::check_vertex(int v, const char* what) const {
  if (v < 0 || v >= n_)
    throw std::invalid_argument(std::string(what) + ": vertex " + std::to_string(v) +
                                " out of range for n=" + std::to_string(n_));
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u, "has_edge");
  check_vertex(v, "has_edge");
  return rows_[static_cast<size_t>(u)] >> v & 1u;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u, "add_edge");
  check_vertex(v, "add_edge");
  if (u == v) throw std::invalid_argument("add_edge: self-loops are not allowed");
  if (has_edge(u, v)) return;
  rows_[static_cast<size_t>(u)] |= 1ull << v;
  rows_[static_cast<size_t>(v)] |= 1ull << u;
  ++m_;
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u, "remove_edge");
  check_vertex(v, "remove_edge");
  if (u == v || !has_edge(u, v)) return;
  rows_[static_cast<size_t>(u)] &= ~(1ull << v);
  rows_[static_cast<size_t>(v)] &= ~(1ull << u);
  --m_;
}

std::uint64_t Graph::neighbor_bits(int v) const {
  check_vertex(v, "neighbor_bits");
  return rows_[static_cast<size_t>(v)];
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

int Graph::min_degree() const {
  if (n_ == 0) return 0;
  int d = n_;
  for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
  return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<size_t>(m_));
  for (int u = 0; u < n_; ++u)
    for_each_bit(rows_[static_cast<size_t>(u)] >> u >> 1, [&](int off) {
      out.emplace_back(u, u + 1 + off);
    });
  return out;
}

Graph complement(const Graph& g) {
  int n = g.vertex_count();
  Graph c(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) c.add_edge(u, v);
  return c;
}

VertexSet common_neighbors(const Graph& g, int u, int v) {
  if (u == v) throw std::invalid_argument("common_neighbors: u == v");
  return VertexSet::from_bits(g.vertex_count(), g.neighbor_bits(u) & g.neighbor_bits(v));
}

bool has_induced_c4(const Graph& g) {
  // An induced C4 is two non-adjacent vertices with two non-adjacent common
  // neighbors.
  int n = g.vertex_count();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (g.has_edge(u, v)) continue;
      std::uint64_t common = g.neighbor_bits(u) & g.neighbor_bits(v);
      bool found = false;
      for_each_bit(common, [&](int a) {
        if (common >> a >> 1 & ~(g.neighbor_bits(a) >> a >> 1)) found = true;
      });
      if (found) return true;
    }
  return false;
}

bool has_triangle(const Graph& g) {
  int n = g.vertex_count();
  for (int u = 0; u < n; ++u) {
    std::uint64_t nb = g.neighbor_bits(u) >> u >> 1;
    bool found = false;
    for_each_bit(nb, [&](int off) {
      int v = u + 1 + off;
      if (g.neighbor_bits(v) & (nb << (u + 1)) & ~(1ull << v)) found = true;
    });
    if (found) return true;
  }
  return false;
}

bool is_clique(const Graph& g, std::uint64_t mask) {
  bool ok = true;
  for_each_bit(mask, [&](int v) {
    std::uint64_t others = mask & ~(1ull << v);
    if ((g.neighbor_bits(v) & others) != others) ok = false;
  });
  return ok;
}

bool is_independent(const Graph& g, std::uint64_t mask) {
  bool ok = true;
  for_each_bit(mask, [&](int v) {
    if (g.neighbor_bits(v) & mask) ok = false;
  });
  return ok;
}

DeletionResult delete_vertices(const Graph& g, const VertexSet& vs) {
  int n = g.vertex_count();
  std::vector<int> old_to_new(static_cast<size_t>(n), -1);
  int next = 0;
  for (int v = 0; v < n; ++v)
    if (!vs.contains(v)) old_to_new[static_cast<size_t>(v)] = next++;
  Graph h(next);
  for (auto [u, v] : g.edges()) {
    int nu = old_to_new[static_cast<size_t>(u)];
    int nv = old_to_new[static_cast<size_t>(v)];
    if (nu >= 0 && nv >= 0) h.add_edge(nu, nv);
  }
  return {std::move(h), std::move(old_to_new)};
}

DeletionResult delete_vertex(const Graph& g, int v) {
  VertexSet vs(g.vertex_count());
  vs.add(v);
  return delete_vertices(g, vs);
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
  return delete_vertices(g, keep.complement_in_universe()).graph;
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  int n = g.vertex_count();
  assert(static_cast<int>(perm.size()) == n);
  Graph h(n);
  for (auto [u, v] : g.edges()) h.add_edge(perm[static_cast<size_t>(u)], perm[static_cast<size_t>(v)]);
  return h;
}

}  // namespace imw
