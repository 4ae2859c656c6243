#ifndef IMW_SOLVER_HPP
#define IMW_SOLVER_HPP

#include <cstdint>
#include <optional>

#include "imw/certificate.hpp"
#include "imw/graph.hpp"
#include "imw/target.hpp"

namespace imw {

struct SolveLimits {
  std::uint64_t max_nodes = 50'000'000;  // search nodes before Undecided
  std::uint64_t max_millis = 0;          // wall clock cap; 0 disables
};

enum class SolveStatus { Found, NotFound, Undecided };

const char* to_string(SolveStatus s);

struct SolveResult {
  SolveStatus status = SolveStatus::NotFound;
  std::optional<ImmersionCertificate> certificate;
  std::uint64_t nodes = 0;  // search effort actually spent

  bool found() const { return status == SolveStatus::Found; }
};

/// Exact immersion test: a certificate exists in the result iff h immerses
/// into g. Enumerates injective branch maps (outer) and packs pairwise
/// edge-disjoint connecting paths by backtracking (inner); both loops are
/// deterministic. Budget exhaustion yields Undecided, never NotFound.
SolveResult find_immersion(const Graph& g, const Graph& h, const SolveLimits& limits = {});

/// Specialized search for K_{s,t}: branch sides are enumerated as sets
/// (part-internal permutations quotiented out) and candidates are filtered
/// by degree (s-side needs degree >= t, t-side degree >= s).
SolveResult find_kst_immersion(const Graph& g, int s, int t, const SolveLimits& limits = {});

/// Clique target K_k.
SolveResult find_clique_immersion(const Graph& g, int k, const SolveLimits& limits = {});

/// K^m_{m,t}: clique of size m joined completely to an independent t-set.
SolveResult find_clique_topped_immersion(const Graph& g, int m, int t,
                                         const SolveLimits& limits = {});

/// Dispatch on a TargetSpec.
SolveResult find_target_immersion(const Graph& g, const TargetSpec& target,
                                  const SolveLimits& limits = {});

}  // namespace imw

#endif
