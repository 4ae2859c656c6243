#ifndef IMW_AUDIT_HPP
#define IMW_AUDIT_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "imw/claims.hpp"
#include "imw/graph.hpp"
#include "imw/solver.hpp"

namespace imw {

/// Result of walking the counterexample claim chain against one (g, ell).
/// A graph on which every claim holds is not by itself a problem: such a
/// graph simply is not shaped like a minimal counterexample, and the target
/// immersion must then be found directly. Only "all claims hold and the
/// immersion is missing" would contradict the theorem.
struct ProofAudit {
  int n = 0;
  int ell = 0;
  ClaimVerdict claim0;             // n >= 4*ell-1 and odd
  ClaimVerdict claim1;             // common neighborhoods of non-adjacent pairs <= ell-2
  ClaimVerdict alpha_criticality;  // every edge critical
  ClaimVerdict claim2;             // X''_a, Y''_a nonempty, all decompositions
  ClaimVerdict claim3;             // |X'_a| <= ell-2 and |X''_a| >= m+4-|Y| (and Y-side)
  ClaimVerdict claim4;             // G[C] is a clique, all decompositions
  bool c4_free = false;            // informational

  enum class Outcome { ViolationFound, DirectImmersionFound, DirectImmersionUndecided, Anomaly };
  Outcome outcome = Outcome::ViolationFound;
  std::string first_violation;  // claim name, empty when none
  std::optional<std::uint64_t> direct_certificate_digest;

  bool anomalous() const { return outcome == Outcome::Anomaly; }
};

const char* to_string(ProofAudit::Outcome o);

/// Evaluates the claim chain in order, short-circuiting at the first
/// violation unless full_evaluation is set (skipped claims are marked
/// Skipped). When everything holds, searches for the K_{ell,ceil(n/2)-ell}
/// immersion directly. Preconditions: alpha(g) = 2 and 2*ell <= ceil(n/2).
ProofAudit audit_proof(const Graph& g, int ell, bool full_evaluation = false,
                       const SolveLimits& limits = {});

std::string to_json(const ProofAudit& audit);

}  // namespace imw

#endif
