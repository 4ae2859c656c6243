#ifndef IMW_CANONICAL_HPP
#define IMW_CANONICAL_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "imw/graph.hpp"

namespace imw {

/// Complete isomorphism invariant: vertex count plus the upper-triangle
/// adjacency bits of the canonically relabeled graph (column order, packed
/// big-endian so word comparison is bitstring comparison).
struct CanonCode {
  int n = 0;
  std::vector<std::uint64_t> words;
  auto operator<=>(const CanonCode&) const = default;
};

struct CanonCodeHash {
  size_t operator()(const CanonCode& c) const;
};

struct CanonResult {
  CanonCode code;
  std::vector<int> labeling;  // position -> original vertex
  // Automorphisms discovered during the search. Always genuine automorphisms;
  // not guaranteed to generate the full group.
  std::vector<std::vector<int>> generators;
};

/// Adjacency bits of g under an explicit labeling (position -> vertex).
CanonCode encode_with_labeling(const Graph& g, std::span<const int> labeling);

/// Canonical labeling by partition refinement + individualization. The code
/// is the minimum encoding over the refinement tree's leaves, which is a
/// complete invariant; orbit pruning keeps highly symmetric graphs cheap.
CanonResult canonical_labeling(const Graph& g);

/// Same, with an initial vertex coloring: only color-preserving relabelings
/// compete, so codes of (g, colors) and (g, colors') agree exactly when a
/// color-preserving automorphism links them.
CanonResult canonical_labeling(const Graph& g, std::span<const int> colors);

CanonCode canon_code(const Graph& g);
Graph canonical_form(const Graph& g);
bool are_isomorphic(const Graph& a, const Graph& b);

/// True iff some injective map V(h) -> V(g) sends h-edges to g-edges.
bool is_subgraph_of(const Graph& h, const Graph& g);

}  // namespace imw

#endif
