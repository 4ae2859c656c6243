#ifndef IMW_CERTIFICATE_HPP
#define IMW_CERTIFICATE_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "imw/graph.hpp"

namespace imw {

/// Witness that h immerses into g: an injective branch map plus one walk per
/// h-edge, all pairwise edge-disjoint in g.
struct ImmersionCertificate {
  // branch[hv] = image of h-vertex hv in g.
  std::vector<int> branch;
  // One entry per h-edge (u < v), keyed by that edge; walk is a vertex
  // sequence in g from branch[u] to branch[v].
  struct Path {
    std::pair<int, int> h_edge;
    std::vector<int> walk;
  };
  std::vector<Path> paths;

  bool operator==(const ImmersionCertificate&) const = default;
};

/// Fixed schema: {"branch":[...],"paths":[{"h_edge":[u,v],"walk":[...]},...]}
std::string to_json(const ImmersionCertificate& cert);

/// FNV-1a of the JSON serialization; stable across runs.
std::uint64_t certificate_digest(const ImmersionCertificate& cert);

}  // namespace imw

#endif
