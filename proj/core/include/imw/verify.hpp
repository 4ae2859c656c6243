#ifndef IMW_VERIFY_HPP
#define IMW_VERIFY_HPP

#include <string>

#include "imw/certificate.hpp"
#include "imw/graph.hpp"

namespace imw {

/// Reason codes for rejected certificates.
enum class CertificateFault {
  None,
  BranchSizeMismatch,   // |branch| != |V(h)|
  BranchOutOfRange,     // branch image not a g-vertex
  BranchNotInjective,
  PathCountMismatch,    // number of paths != |E(h)|
  PathForNonEdge,       // keyed by a pair that is not an h-edge
  DuplicatePathKey,     // two paths for the same h-edge
  EmptyWalk,
  EndpointMismatch,     // walk does not run branch[u] -> branch[v]
  WalkOutOfRange,       // walk vertex not a g-vertex
  NonAdjacentStep,      // consecutive walk vertices not adjacent in g
  RepeatedEdgeInPath,   // an edge used twice inside one walk
  SharedEdge,           // an edge used by two different walks
};

const char* to_string(CertificateFault f);

struct VerifyResult {
  bool ok = false;
  CertificateFault fault = CertificateFault::None;
  std::string detail;

  explicit operator bool() const { return ok; }
};

/// Independent certificate checker: true iff `cert` witnesses an immersion of
/// h into g. Checks branch injectivity, per-edge walks with matching
/// endpoints and adjacency, and global edge-disjointness, in time linear in
/// the total walk length. Deliberately shares no code with the solver.
VerifyResult verify_certificate(const Graph& g, const Graph& h, const ImmersionCertificate& cert);

}  // namespace imw

#endif
