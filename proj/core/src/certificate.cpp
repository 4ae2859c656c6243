#include "imw/certificate.hpp"

#include <sstream>

namespace imw {

std::string to_json(const ImmersionCertificate& cert) {
  std::ostringstream out;
  out << R"({"branch":[)";
  for (size_t i = 0; i < cert.branch.size(); ++i) {
    if (i) out << ",";
    out << cert.branch[i];
  }
  out << R"(],"paths":[)";
  for (size_t i = 0; i < cert.paths.size(); ++i) {
    const auto& p = cert.paths[i];
    if (i) out << ",";
    out << R"({"h_edge":[)" << p.h_edge.first << "," << p.h_edge.second << R"(],"walk":[)";
    for (size_t k = 0; k < p.walk.size(); ++k) {
      if (k) out << ",";
      out << p.walk[k];
    }
    out << "]}";
  }
  out << "]}";
  return out.str();
}

std::uint64_t certificate_digest(const ImmersionCertificate& cert) {
  std::uint64_t h = 1469598103934665603ull;
  for (char c : to_json(cert)) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace imw
