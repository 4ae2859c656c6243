#ifndef IMW_TARGET_HPP
#define IMW_TARGET_HPP

#include <optional>
#include <string>
#include <string_view>

#include "imw/graph.hpp"

namespace imw {

/// Immersion target families. CliqueToppedBipartite(m,t) is the complete
/// bipartite K_{m,t} with its m-side turned into a clique.
struct TargetSpec {
  enum class Kind { Clique, CompleteBipartite, CliqueToppedBipartite, Explicit };
  Kind kind = Kind::Clique;
  int a = 0;
  int b = 0;
  std::optional<Graph> explicit_graph;

  static TargetSpec clique(int k) { return {Kind::Clique, k, 0, std::nullopt}; }
  static TargetSpec complete_bipartite(int s, int t) {
    return {Kind::CompleteBipartite, s, t, std::nullopt};
  }
  static TargetSpec clique_topped(int m, int t) {
    return {Kind::CliqueToppedBipartite, m, t, std::nullopt};
  }
  static TargetSpec explicit_graph_of(Graph g) {
    return {Kind::Explicit, 0, 0, std::move(g)};
  }

  /// Accepts "clique:K", "kst:S,T", "kll:L,T" and "g6:<line>".
  static TargetSpec parse(std::string_view text);

  std::string describe() const;
};

/// Concrete target graph with the fixed canonical labeling: clique / first
/// part vertices come first. Throws std::invalid_argument on nonpositive
/// part sizes.
Graph make_target(const TargetSpec& spec);

}  // namespace imw

#endif
