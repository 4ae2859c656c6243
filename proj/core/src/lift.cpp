#include "imw/lift.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "imw/canonical.hpp"

namespace imw {

const char* to_string(LiftViolation v) {
  switch (v) {
    case LiftViolation::VertexOutOfRange: return "VertexOutOfRange";
    case LiftViolation::EqualEndpoints: return "EqualEndpoints";
    case LiftViolation::MissingFirstEdge: return "MissingFirstEdge";
    case LiftViolation::MissingSecondEdge: return "MissingSecondEdge";
    case LiftViolation::ExistingChord: return "ExistingChord";
  }
  return "?";
}

std::optional<LiftViolation> lift_violation(const Graph& g, int u, int v, int w) {
  int n = g.vertex_count();
  auto bad = [n](int x) { return x < 0 || x >= n; };
  if (bad(u) || bad(v) || bad(w)) return LiftViolation::VertexOutOfRange;
  if (u == w) return LiftViolation::EqualEndpoints;
  if (!g.has_edge(u, v)) return LiftViolation::MissingFirstEdge;
  if (!g.has_edge(v, w)) return LiftViolation::MissingSecondEdge;
  if (g.has_edge(u, w)) return LiftViolation::ExistingChord;
  return std::nullopt;
}

Graph lift(const Graph& g, int u, int v, int w) {
  if (auto viol = lift_violation(g, u, v, w)) {
    std::ostringstream msg;
    msg << "lift(" << u << "," << v << "," << w << "): " << to_string(*viol);
    throw LiftError(*viol, msg.str());
  }
  Graph h = g;
  h.remove_edge(u, v);
  h.remove_edge(v, w);
  h.add_edge(u, w);
  return h;
}

std::string to_json(const LiftSequence& seq) {
  std::ostringstream out;
  out << "[";
  for (size_t i = 0; i < seq.size(); ++i) {
    const LiftStep& s = seq[i];
    if (i) out << ",";
    switch (s.kind) {
      case LiftStep::Kind::Lift:
        out << R"({"op":"lift","u":)" << s.u << R"(,"v":)" << s.v << R"(,"w":)" << s.w << "}";
        break;
      case LiftStep::Kind::DeleteVertex:
        out << R"({"op":"delete_vertex","v":)" << s.v << "}";
        break;
      case LiftStep::Kind::DeleteEdge:
        out << R"({"op":"delete_edge","u":)" << s.u << R"(,"v":)" << s.v << "}";
        break;
    }
  }
  out << "]";
  return out.str();
}

ApplyResult apply_sequence(const Graph& g, const LiftSequence& seq) {
  Graph cur = g;
  std::vector<int> old_to_new(static_cast<size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) old_to_new[static_cast<size_t>(v)] = v;

  for (size_t i = 0; i < seq.size(); ++i) {
    const LiftStep& s = seq[i];
    int n = cur.vertex_count();
    auto in_range = [n](int x) { return x >= 0 && x < n; };
    switch (s.kind) {
      case LiftStep::Kind::Lift: {
        if (auto viol = lift_violation(cur, s.u, s.v, s.w))
          throw SequenceError(i, std::string("lift: ") + to_string(*viol));
        cur = lift(cur, s.u, s.v, s.w);
        break;
      }
      case LiftStep::Kind::DeleteVertex: {
        if (!in_range(s.v)) throw SequenceError(i, "delete_vertex: vertex out of range");
        DeletionResult del = delete_vertex(cur, s.v);
        cur = std::move(del.graph);
        for (int& m : old_to_new)
          if (m != -1) m = del.old_to_new[static_cast<size_t>(m)];
        break;
      }
      case LiftStep::Kind::DeleteEdge: {
        if (!in_range(s.u) || !in_range(s.v))
          throw SequenceError(i, "delete_edge: vertex out of range");
        if (!cur.has_edge(s.u, s.v)) throw SequenceError(i, "delete_edge: edge not present");
        cur.remove_edge(s.u, s.v);
        break;
      }
    }
  }
  return {std::move(cur), std::move(old_to_new)};
}

namespace {

// Successor moves: all legal lifts plus single edge deletions. Deleting an
// edge only matters when it unblocks a lift; vertex deletions never help the
// subgraph goal and are left out of the move set.
std::vector<std::pair<LiftStep, Graph>> successors(const Graph& g) {
  std::vector<std::pair<LiftStep, Graph>> out;
  int n = g.vertex_count();
  for (int v = 0; v < n; ++v) {
    std::uint64_t nb = g.neighbor_bits(v);
    for_each_bit(nb, [&](int u) {
      for_each_bit(nb >> u >> 1, [&](int off) {
        int w = u + 1 + off;
        if (!g.has_edge(u, w)) out.emplace_back(LiftStep::make_lift(u, v, w), lift(g, u, v, w));
      });
    });
  }
  for (auto [u, v] : g.edges()) {
    Graph h = g;
    h.remove_edge(u, v);
    out.emplace_back(LiftStep::delete_edge(u, v), std::move(h));
  }
  return out;
}

}  // namespace

RewriteSearchResult immersion_by_rewriting(const Graph& g, const Graph& h, std::uint64_t budget) {
  if (h.vertex_count() > g.vertex_count()) return {std::nullopt, true, 0};
  if (is_subgraph_of(h, g)) return {LiftSequence{}, true, 0};

  struct Node {
    Graph graph;
    int parent;
    LiftStep step;
  };
  std::vector<Node> nodes;
  nodes.push_back({g, -1, LiftStep{}});
  std::unordered_set<CanonCode, CanonCodeHash> seen;
  seen.insert(canon_code(g));

  std::uint64_t expanded = 0;
  for (size_t head = 0; head < nodes.size(); ++head) {
    if (expanded >= budget) return {std::nullopt, false, expanded};
    ++expanded;
    // nodes[head] may reallocate while we append; take a copy of the graph.
    Graph cur = nodes[head].graph;
    for (auto& [step, next] : successors(cur)) {
      if (!seen.insert(canon_code(next)).second) continue;
      if (is_subgraph_of(h, next)) {
        LiftSequence seq{step};
        for (int at = static_cast<int>(head); at > 0; at = nodes[static_cast<size_t>(at)].parent)
          seq.push_back(nodes[static_cast<size_t>(at)].step);
        std::reverse(seq.begin(), seq.end());
        return {std::move(seq), false, expanded};
      }
      nodes.push_back({std::move(next), static_cast<int>(head), step});
    }
  }
  return {std::nullopt, true, expanded};
}

}  // namespace imw
