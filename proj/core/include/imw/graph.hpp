#ifndef IMW_GRAPH_HPP
#define IMW_GRAPH_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace imw {

// One adjacency row fits in a machine word; 62 is also the largest vertex
// count the short graph6 form can express.
inline constexpr int kMaxVertices = 62;

/// Set of vertex indices inside a fixed {0..n-1} universe, stored as a bitmask.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe) : universe_(check_universe(universe)) {}
  VertexSet(int universe, std::initializer_list<int> vs) : VertexSet(universe) {
    for (int v : vs) add(v);
  }
  static VertexSet from_bits(int universe, std::uint64_t bits);
  static VertexSet full(int universe);

  int universe() const { return universe_; }
  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  bool contains(int v) const { return in_range(v) && (bits_ >> v & 1u); }
  std::uint64_t bits() const { return bits_; }

  void add(int v);
  void remove(int v);

  VertexSet intersect(const VertexSet& o) const { return with_bits(bits_ & o.bits_); }
  VertexSet unite(const VertexSet& o) const { return with_bits(bits_ | o.bits_); }
  VertexSet minus(const VertexSet& o) const { return with_bits(bits_ & ~o.bits_); }
  VertexSet complement_in_universe() const;

  std::vector<int> to_vector() const;  // ascending
  int min_element() const;             // -1 when empty

  bool operator==(const VertexSet&) const = default;

 private:
  static int check_universe(int n);
  bool in_range(int v) const { return v >= 0 && v < universe_; }
  VertexSet with_bits(std::uint64_t b) const {
    VertexSet s(universe_);
    s.bits_ = b;
    return s;
  }

  std::uint64_t bits_ = 0;
  int universe_ = 0;
};

/// Simple undirected graph on vertices 0..n-1 with bitmask adjacency rows.
/// Values are cheap to copy and treated as immutable once built; every
/// algorithm in the library takes `const Graph&` and returns fresh values.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
  static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }
  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);     // no-op when already present
  void remove_edge(int u, int v);  // no-op when absent

  std::uint64_t neighbor_bits(int v) const;
  VertexSet neighbors(int v) const { return VertexSet::from_bits(n_, neighbor_bits(v)); }
  std::uint64_t closed_neighbor_bits(int v) const { return neighbor_bits(v) | (1ull << v); }
  int degree(int v) const { return std::popcount(neighbor_bits(v)); }
  int max_degree() const;
  int min_degree() const;

  std::vector<std::pair<int, int>> edges() const;  // lexicographic, u < v

  std::uint64_t all_vertices_bits() const { return n_ == 64 ? ~0ull : (1ull << n_) - 1; }

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v, const char* what) const;

  int n_ = 0;
  int m_ = 0;
  std::vector<std::uint64_t> rows_;
};

Graph complement(const Graph& g);

/// N(u) n N(v). u == v is a usage error.
VertexSet common_neighbors(const Graph& g, int u, int v);

/// True iff some 4-vertex subset induces exactly a 4-cycle.
bool has_induced_c4(const Graph& g);

bool has_triangle(const Graph& g);

/// True iff the masked vertices are pairwise adjacent.
bool is_clique(const Graph& g, std::uint64_t mask);

/// True iff no two masked vertices are adjacent.
bool is_independent(const Graph& g, std::uint64_t mask);

struct DeletionResult {
  Graph graph;
  // old_to_new[v] is v's label in the new graph, or -1 when deleted.
  std::vector<int> old_to_new;
};

DeletionResult delete_vertex(const Graph& g, int v);
DeletionResult delete_vertices(const Graph& g, const VertexSet& vs);
Graph induced_subgraph(const Graph& g, const VertexSet& keep);

/// Relabel: vertex v becomes perm[v].
Graph relabel(const Graph& g, std::span<const int> perm);

/// Calls fn(v) for every set bit, ascending.
template <typename Fn>
inline void for_each_bit(std::uint64_t bits, Fn&& fn) {
  while (bits) {
    int v = std::countr_zero(bits);
    bits &= bits - 1;
    fn(v);
  }
}

}  // namespace imw

#endif
