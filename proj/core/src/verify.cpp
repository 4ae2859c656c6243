#include "imw/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace imw {

const char* to_string(CertificateFault f) {
  switch (f) {
    case CertificateFault::None: return "None";
    case CertificateFault::BranchSizeMismatch: return "BranchSizeMismatch";
    case CertificateFault::BranchOutOfRange: return "BranchOutOfRange";
    case CertificateFault::BranchNotInjective: return "BranchNotInjective";
    case CertificateFault::PathCountMismatch: return "PathCountMismatch";
    case CertificateFault::PathForNonEdge: return "PathForNonEdge";
    case CertificateFault::DuplicatePathKey: return "DuplicatePathKey";
    case CertificateFault::EmptyWalk: return "EmptyWalk";
    case CertificateFault::EndpointMismatch: return "EndpointMismatch";
    case CertificateFault::WalkOutOfRange: return "WalkOutOfRange";
    case CertificateFault::NonAdjacentStep: return "NonAdjacentStep";
    case CertificateFault::RepeatedEdgeInPath: return "RepeatedEdgeInPath";
    case CertificateFault::SharedEdge: return "SharedEdge";
  }
  return "?";
}

namespace {

VerifyResult fail(CertificateFault f, const std::string& detail) { return {false, f, detail}; }

}  // namespace

VerifyResult verify_certificate(const Graph& g, const Graph& h, const ImmersionCertificate& cert) {
  int hn = h.vertex_count();
  int gn = g.vertex_count();

  if (static_cast<int>(cert.branch.size()) != hn)
    return fail(CertificateFault::BranchSizeMismatch,
                "branch has " + std::to_string(cert.branch.size()) + " entries, h has " +
                    std::to_string(hn) + " vertices");
  std::set<int> images;
  for (int hv = 0; hv < hn; ++hv) {
    int gv = cert.branch[static_cast<size_t>(hv)];
    if (gv < 0 || gv >= gn)
      return fail(CertificateFault::BranchOutOfRange,
                  "branch[" + std::to_string(hv) + "] = " + std::to_string(gv));
    if (!images.insert(gv).second)
      return fail(CertificateFault::BranchNotInjective,
                  "g-vertex " + std::to_string(gv) + " used twice");
  }

  if (static_cast<int>(cert.paths.size()) != h.edge_count())
    return fail(CertificateFault::PathCountMismatch,
                std::to_string(cert.paths.size()) + " paths for " +
                    std::to_string(h.edge_count()) + " target edges");

  std::set<std::pair<int, int>> seen_keys;
  std::set<std::pair<int, int>> used_edges;  // g-edges, normalized u < v
  for (const auto& p : cert.paths) {
    auto [hu, hv] = p.h_edge;
    std::ostringstream key;
    key << "(" << hu << "," << hv << ")";
    if (hu < 0 || hu >= hn || hv < 0 || hv >= hn || !h.has_edge(hu, hv))
      return fail(CertificateFault::PathForNonEdge, "key " + key.str() + " is not an edge of h");
    auto norm = std::minmax(hu, hv);
    if (!seen_keys.insert({norm.first, norm.second}).second)
      return fail(CertificateFault::DuplicatePathKey, "second path for " + key.str());

    if (p.walk.empty()) return fail(CertificateFault::EmptyWalk, "no walk for " + key.str());
    for (int gv : p.walk)
      if (gv < 0 || gv >= gn)
        return fail(CertificateFault::WalkOutOfRange,
                    "walk vertex " + std::to_string(gv) + " in " + key.str());
    if (p.walk.front() != cert.branch[static_cast<size_t>(hu)] ||
        p.walk.back() != cert.branch[static_cast<size_t>(hv)])
      return fail(CertificateFault::EndpointMismatch,
                  "walk for " + key.str() + " runs " + std::to_string(p.walk.front()) + ".." +
                      std::to_string(p.walk.back()) + ", expected " +
                      std::to_string(cert.branch[static_cast<size_t>(hu)]) + ".." +
                      std::to_string(cert.branch[static_cast<size_t>(hv)]));

    std::set<std::pair<int, int>> walk_edges;
    for (size_t k = 0; k + 1 < p.walk.size(); ++k) {
      int a = p.walk[k], b = p.walk[k + 1];
      if (!g.has_edge(a, b))
        return fail(CertificateFault::NonAdjacentStep,
                    std::to_string(a) + "-" + std::to_string(b) + " in walk " + key.str());
      auto e = std::minmax(a, b);
      if (!walk_edges.insert({e.first, e.second}).second)
        return fail(CertificateFault::RepeatedEdgeInPath,
                    "edge " + std::to_string(e.first) + "-" + std::to_string(e.second) +
                        " repeated inside walk " + key.str());
    }
    for (auto e : walk_edges)
      if (!used_edges.insert(e).second)
        return fail(CertificateFault::SharedEdge,
                    "edge " + std::to_string(e.first) + "-" + std::to_string(e.second) +
                        " shared between walks");
  }
  return {true, CertificateFault::None, ""};
}

}  // namespace imw
