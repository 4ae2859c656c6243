#ifndef IMW_LIFT_HPP
#define IMW_LIFT_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "imw/graph.hpp"

namespace imw {

enum class LiftViolation {
  VertexOutOfRange,
  EqualEndpoints,    // u == w
  MissingFirstEdge,  // uv not an edge
  MissingSecondEdge, // vw not an edge
  ExistingChord,     // uw already an edge
};

const char* to_string(LiftViolation v);

struct LiftError : std::invalid_argument {
  LiftError(LiftViolation k, const std::string& msg) : std::invalid_argument(msg), kind(k) {}
  LiftViolation kind;
};

/// First violated lift precondition, or nullopt when lift(g,u,v,w) is legal.
std::optional<LiftViolation> lift_violation(const Graph& g, int u, int v, int w);

/// Replace the edges uv, vw by the single edge uw. Requires uv, vw present,
/// u != w and uw absent; throws LiftError otherwise.
Graph lift(const Graph& g, int u, int v, int w);

struct LiftStep {
  enum class Kind { Lift, DeleteVertex, DeleteEdge };
  Kind kind;
  int u = -1, v = -1, w = -1;  // Lift uses u,v,w; DeleteVertex uses v; DeleteEdge uses u,v

  static LiftStep make_lift(int u, int v, int w) { return {Kind::Lift, u, v, w}; }
  static LiftStep delete_vertex(int v) { return {Kind::DeleteVertex, -1, v, -1}; }
  static LiftStep delete_edge(int u, int v) { return {Kind::DeleteEdge, u, v, -1}; }
  bool operator==(const LiftStep&) const = default;
};

using LiftSequence = std::vector<LiftStep>;

/// JSON array of tagged steps, for debug reports.
std::string to_json(const LiftSequence& seq);

struct SequenceError : std::runtime_error {
  SequenceError(size_t index, const std::string& msg)
      : std::runtime_error("step " + std::to_string(index) + ": " + msg), step_index(index) {}
  size_t step_index;
};

struct ApplyResult {
  Graph graph;
  // Map from original vertex labels to labels in graph; -1 when deleted.
  std::vector<int> old_to_new;
};

/// Folds the steps left to right. Steps refer to the labels of the graph
/// produced by the preceding steps. The first inapplicable step throws
/// SequenceError with its index.
ApplyResult apply_sequence(const Graph& g, const LiftSequence& seq);

struct RewriteSearchResult {
  std::optional<LiftSequence> sequence;
  bool exhausted = false;  // true: the whole reachable space was covered
  std::uint64_t expanded = 0;
};

/// Rewriting-based immersion oracle: breadth-first search over graphs
/// reachable from g by lifts and edge deletions (memoized by canonical form)
/// for a state containing h as a subgraph. Exact but only meant for tiny
/// instances; `budget` caps the number of expanded states.
RewriteSearchResult immersion_by_rewriting(const Graph& g, const Graph& h,
                                           std::uint64_t budget = 1u << 20);

}  // namespace imw

#endif
