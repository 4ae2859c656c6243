#include "imw/audit.hpp"

#include <functional>
#include <sstream>
#include <vector>

#include "imw/alpha.hpp"

namespace imw {

const char* to_string(ProofAudit::Outcome o) {
  switch (o) {
    case ProofAudit::Outcome::ViolationFound: return "violation_found";
    case ProofAudit::Outcome::DirectImmersionFound: return "direct_immersion_found";
    case ProofAudit::Outcome::DirectImmersionUndecided: return "direct_immersion_undecided";
    case ProofAudit::Outcome::Anomaly: return "anomaly";
  }
  return "?";
}

namespace {

ClaimVerdict eval_claim0(const Graph& g, int ell) {
  int n = g.vertex_count();
  if (n % 2 == 0) return ClaimVerdict::violated("n=" + std::to_string(n) + " is even");
  if (n < 4 * ell - 1)
    return ClaimVerdict::violated("n=" + std::to_string(n) + " < 4*ell-1=" +
                                  std::to_string(4 * ell - 1));
  return ClaimVerdict::holds();
}

ClaimVerdict eval_claim1(const Graph& g, int ell) {
  int n = g.vertex_count();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (g.has_edge(u, v)) continue;
      int common = common_neighbors(g, u, v).size();
      if (common > ell - 2)
        return ClaimVerdict::violated("pair (" + std::to_string(u) + "," + std::to_string(v) +
                                      ") has |N(u) cap N(v)| = " + std::to_string(common) +
                                      " > ell-2 = " + std::to_string(ell - 2));
    }
  return ClaimVerdict::holds();
}

ClaimVerdict eval_alpha_criticality(const Graph& g) {
  int alpha = independence_number(g);
  for (auto [u, v] : g.edges()) {
    Graph h = g;
    h.remove_edge(u, v);
    if (independence_number(h) <= alpha)
      return ClaimVerdict::violated("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                    ") is not critical");
  }
  return ClaimVerdict::holds();
}

template <typename Fn>
ClaimVerdict over_all_decompositions(const Graph& g, Fn&& check) {
  int n = g.vertex_count();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      if (g.has_edge(x, y)) continue;
      Decomposition d = decompose(g, x, y);
      ClaimVerdict v = check(d);
      if (v.violated_p()) {
        v.witness = "x=" + std::to_string(x) + " y=" + std::to_string(y) + ": " + v.witness;
        return v;
      }
    }
  return ClaimVerdict::holds();
}

ClaimVerdict eval_claim3(const Graph& g, int ell) {
  int n = g.vertex_count();
  if (n % 2 == 0) return ClaimVerdict::not_applicable("m undefined for even n");
  int m = (n - 1) / 2;
  return over_all_decompositions(g, [&](const Decomposition& d) {
    for (int a : d.C.to_vector()) {
      if (d.Xp[static_cast<size_t>(a)].size() > ell - 2)
        return ClaimVerdict::violated("|X'_" + std::to_string(a) + "| > ell-2");
      if (d.Yp[static_cast<size_t>(a)].size() > ell - 2)
        return ClaimVerdict::violated("|Y'_" + std::to_string(a) + "| > ell-2");
      if (d.Xpp[static_cast<size_t>(a)].size() < m + 4 - d.Y.size())
        return ClaimVerdict::violated("|X''_" + std::to_string(a) + "| < m+4-|Y|");
      if (d.Ypp[static_cast<size_t>(a)].size() < m + 4 - d.X.size())
        return ClaimVerdict::violated("|Y''_" + std::to_string(a) + "| < m+4-|X|");
    }
    return ClaimVerdict::holds();
  });
}

ClaimVerdict eval_claim4(const Graph& g) {
  return over_all_decompositions(g, [&](const Decomposition& d) {
    auto c = d.C.to_vector();
    for (size_t i = 0; i < c.size(); ++i)
      for (size_t j = i + 1; j < c.size(); ++j)
        if (!g.has_edge(c[i], c[j]))
          return ClaimVerdict::violated("C not a clique: (" + std::to_string(c[i]) + "," +
                                        std::to_string(c[j]) + ") missing");
    return ClaimVerdict::holds();
  });
}

}  // namespace

ProofAudit audit_proof(const Graph& g, int ell, bool full_evaluation, const SolveLimits& limits) {
  int n = g.vertex_count();
  int half = (n + 1) / 2;
  if (ell < 1 || 2 * ell > half)
    throw std::invalid_argument("audit_proof: need 1 <= ell with 2*ell <= ceil(n/2)");
  if (independence_number(g) != 2) throw std::invalid_argument("audit_proof: alpha(g) != 2");

  ProofAudit audit;
  audit.n = n;
  audit.ell = ell;
  audit.c4_free = !has_induced_c4(g);

  struct Entry {
    const char* name;
    ClaimVerdict* slot;
    std::function<ClaimVerdict()> eval;
  };
  std::vector<Entry> chain = {
      {"claim0", &audit.claim0, [&] { return eval_claim0(g, ell); }},
      {"claim1", &audit.claim1, [&] { return eval_claim1(g, ell); }},
      {"alpha_criticality", &audit.alpha_criticality, [&] { return eval_alpha_criticality(g); }},
      {"claim2", &audit.claim2,
       [&] { return over_all_decompositions(g, [&](const Decomposition& d) { return check_claim2(g, d); }); }},
      {"claim3", &audit.claim3, [&] { return eval_claim3(g, ell); }},
      {"claim4", &audit.claim4, [&] { return eval_claim4(g); }},
  };

  bool violated = false;
  for (auto& entry : chain) {
    if (violated && !full_evaluation) {
      *entry.slot = ClaimVerdict::skipped();
      continue;
    }
    *entry.slot = entry.eval();
    if (entry.slot->violated_p() && !violated) {
      violated = true;
      audit.first_violation = entry.name;
    }
  }

  if (violated) {
    audit.outcome = ProofAudit::Outcome::ViolationFound;
    return audit;
  }

  // The graph satisfies every structural claim, so it is not shaped like a
  // minimal counterexample; the theorem's conclusion must hold outright.
  SolveResult direct = find_kst_immersion(g, ell, half - ell, limits);
  switch (direct.status) {
    case SolveStatus::Found:
      audit.outcome = ProofAudit::Outcome::DirectImmersionFound;
      audit.direct_certificate_digest = certificate_digest(*direct.certificate);
      break;
    case SolveStatus::Undecided:
      audit.outcome = ProofAudit::Outcome::DirectImmersionUndecided;
      break;
    case SolveStatus::NotFound:
      audit.outcome = ProofAudit::Outcome::Anomaly;
      break;
  }
  return audit;
}

std::string to_json(const ProofAudit& audit) {
  auto claim = [](const ClaimVerdict& v) {
    std::ostringstream out;
    out << R"({"status":")" << to_string(v.status) << R"(")";
    if (!v.witness.empty()) {
      out << R"(,"witness":")";
      for (char c : v.witness) {
        if (c == '"' || c == '\\') out << '\\';
        out << c;
      }
      out << R"(")";
    }
    out << "}";
    return out.str();
  };
  std::ostringstream out;
  out << R"({"n":)" << audit.n << R"(,"ell":)" << audit.ell;
  out << R"(,"claim0":)" << claim(audit.claim0);
  out << R"(,"claim1":)" << claim(audit.claim1);
  out << R"(,"alpha_criticality":)" << claim(audit.alpha_criticality);
  out << R"(,"claim2":)" << claim(audit.claim2);
  out << R"(,"claim3":)" << claim(audit.claim3);
  out << R"(,"claim4":)" << claim(audit.claim4);
  out << R"(,"c4_free":)" << (audit.c4_free ? "true" : "false");
  out << R"(,"outcome":")" << to_string(audit.outcome) << R"(")";
  if (!audit.first_violation.empty())
    out << R"(,"first_violation":")" << audit.first_violation << R"(")";
  if (audit.direct_certificate_digest)
    out << R"(,"direct_certificate_digest":)" << *audit.direct_certificate_digest;
  out << "}";
  return out.str();
}

}  // namespace imw
