#ifndef IMW_CLAIMS_HPP
#define IMW_CLAIMS_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "imw/certificate.hpp"
#include "imw/graph.hpp"

namespace imw {

/// The x/y decomposition of a graph with alpha = 2: C is the common
/// neighborhood of the non-adjacent pair, X avoids y's closed neighborhood,
/// Y avoids x's; X and Y induce cliques and C | X | Y partitions V.
struct Decomposition {
  int x = -1, y = -1;
  VertexSet C, X, Y;
  // Indexed by vertex id; meaningful only for a in C. Xp[a] holds the X
  // vertices adjacent to a, Xpp[a] the rest of X; Yp/Ypp likewise.
  std::vector<VertexSet> Xp, Xpp, Yp, Ypp;
  // X vertices complete to all of C, and the complements.
  VertexSet XpC, XppC, YpC, YppC;
};

/// Builds the decomposition. Usage errors (adjacent x,y; alpha(g) != 2) throw
/// std::invalid_argument.
Decomposition decompose(const Graph& g, int x, int y);

struct ClaimVerdict {
  enum class Status { Holds, Violated, NotApplicable, Skipped };
  Status status = Status::Holds;
  std::string witness;

  static ClaimVerdict holds() { return {Status::Holds, ""}; }
  static ClaimVerdict violated(std::string w) { return {Status::Violated, std::move(w)}; }
  static ClaimVerdict not_applicable(std::string w = "") {
    return {Status::NotApplicable, std::move(w)};
  }
  static ClaimVerdict skipped() { return {Status::Skipped, ""}; }
  bool violated_p() const { return status == Status::Violated; }
};

const char* to_string(ClaimVerdict::Status s);

/// Non-emptiness of every X''_a and Y''_a. Holds vacuously when C is empty;
/// guaranteed to hold on alpha-critical inputs.
ClaimVerdict check_claim2(const Graph& g, const Decomposition& d);

/// A failed precondition of one of the constructive operations.
struct PremiseViolation : std::invalid_argument {
  explicit PremiseViolation(const std::string& premise)
      : std::invalid_argument("premise violated: " + premise), which(premise) {}
  std::string which;
};

/// How a non-adjacent pair {u, v} attaches to the small branch side L of an
/// inner complete-bipartite immersion: A sees u only, B sees both, Cl sees v
/// only; D collects common neighbors outside L, and f injects Cl into D.
struct ExtensionWitness {
  int u = -1, v = -1;
  VertexSet L, A, B, Cl, D;
  std::vector<std::pair<int, int>> f;  // Cl vertex -> D vertex, ascending
};

/// Builds the witness for the path case (neither u nor v complete to L).
ExtensionWitness build_extension_witness(const Graph& g, int u, int v, const VertexSet& L);

/// Grows a K_{ell,k} immersion of g - {u,v} into a K_{ell,k+1} immersion of
/// g. `inner` uses the labels of delete_vertices(g, {u,v}); the result uses
/// g's labels. If u or v sees all of L it joins the big side over direct
/// edges, otherwise u is routed to each c in Cl through u-f(c)-v-c.
/// Preconditions (alpha = 2, uv not an edge, |N(u) cap N(v)| >= ell-1, inner
/// valid) throw PremiseViolation when they fail.
ImmersionCertificate claim1_extend(const Graph& g, int u, int v, int ell,
                                   const ImmersionCertificate& inner);

/// The explicit K_{ell, m+1-ell} immersion built from a decomposition whose
/// C contains a non-adjacent pair u, v (n = 2m+1). The small side is
/// X''_u plus a slice X1 of X''_v; X1-to-Y1 connections are routed through
/// Y''_v with the modular schedule x_i - z_{i+j} - y_j.
ImmersionCertificate claim4_construct(const Graph& g, const Decomposition& d, int u, int v,
                                      int ell);

}  // namespace imw

#endif
