#ifndef IMW_HARNESS_HPP
#define IMW_HARNESS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "imw/graph.hpp"
#include "imw/solver.hpp"

namespace imw {

inline constexpr int kReportFormatVersion = 1;

struct HarnessConfig {
  int n_min = 5;
  int n_max = 8;
  int jobs = 0;  // 0 = hardware concurrency
  std::uint64_t seed = 1;
  SolveLimits limits;
  int max_enumeration_n = 12;
  // When set, the universe is read from this graph6 file instead of being
  // enumerated (filters still apply).
  std::optional<std::string> universe_file;
};

/// One solver invocation inside a sweep. `not_applicable` marks graphs the
/// sweep's premise excludes (they are counted separately, never as failures).
struct CheckOutcome {
  std::string target;
  SolveStatus status = SolveStatus::NotFound;
  bool not_applicable = false;
  std::uint64_t certificate_digest = 0;  // meaningful when status == Found
  std::uint64_t effort_nodes = 0;        // deterministic search effort
  std::string note;
};

struct GraphRecord {
  std::string graph6;
  int n = 0;
  std::vector<CheckOutcome> checks;
};

/// Deterministic sweep report: records appear in universe order regardless of
/// worker count, and all persisted fields are reproducible byte for byte.
struct VerificationReport {
  int format_version = kReportFormatVersion;
  std::string kind;
  std::string universe;  // descriptor, e.g. "alpha2-exact n=5..9"
  int n_min = 0, n_max = 0;
  std::uint64_t seed = 0;
  std::uint64_t budget_nodes = 0;
  std::uint64_t budget_millis = 0;
  int jobs = 0;
  std::vector<GraphRecord> records;

  // summary (always reconciles with the records)
  std::uint64_t graphs = 0;
  std::uint64_t checks = 0;
  std::uint64_t found = 0;
  std::uint64_t not_found = 0;
  std::uint64_t undecided = 0;
  std::uint64_t not_applicable = 0;
  std::uint64_t anomalies = 0;  // audit sweeps only
  bool violated = false;

  // Audit sweeps: first-violation counts per claim, sorted by name.
  std::vector<std::pair<std::string, std::uint64_t>> tabulation;
};

std::string to_json(const VerificationReport& report);
std::string to_text(const VerificationReport& report);

/// 0 = verified, 1 = violation or anomaly, 3 = undecided results present.
int exit_code_for(const VerificationReport& report);

/// For every exact-alpha2 graph on n in [n_min, n_max] and every ell with
/// 2*ell <= ceil(n/2), search for K_{ell, ceil(n/2)-ell} and verify the
/// certificate. Any NotFound marks the report violated.
VerificationReport verify_theorem4(const HarnessConfig& config);

/// Every alpha <= 2 graph without an induced C4 must yield K_{ceil(n/2)};
/// graphs containing an induced C4 are recorded as NotApplicable.
VerificationReport verify_quiroz(const HarnessConfig& config);

/// For each exact-alpha2 graph with 2*ell <= chi(g), search for
/// K^ell_{ell, chi-ell}. A NotFound is retried with doubled budgets before
/// it is reported as a counterexample candidate.
VerificationReport probe_conjecture_kll(const HarnessConfig& config, int ell);

/// Runs audit_proof on every (graph, ell) pair; an all-claims-hold audit
/// whose direct immersion search fails is counted as an anomaly.
/// Per-claim first-violation counts land in the report text.
VerificationReport audit_sweep(const HarnessConfig& config);

/// Shared worker pool: applies fn to 0..count-1 across `jobs` threads,
/// results land at their input index (order independent of scheduling).
void parallel_for_index(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn);

/// The sweep universes, exposed for tests and the CLI.
std::vector<Graph> harness_universe_alpha2(const HarnessConfig& config, int n, bool exact);

}  // namespace imw

#endif
