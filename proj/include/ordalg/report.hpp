#pragma once

// Named check suites over an instance and the JSON analysis report.

#include "ordalg/catalog.hpp"
#include "ordalg/verdict.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace ordalg {

enum class Suite { Order, Riesz, Ideal, All };
[[nodiscard]] const char *to_string(Suite s);
/// Throws SchemaError.
[[nodiscard]] Suite suite_from_string(const std::string &s);

struct CheckRecord {
  std::string name;
  /// The statement being checked, in words.
  std::string anchor;
  Status status = Status::Holds;
  /// Rendered witness elements (monoid elements, ideals or ring elements).
  std::vector<std::string> witness;
  std::string reason;
  std::size_t checked = 0;
  std::size_t unchecked = 0;
  std::string detail;
  /// Zero unless timings were requested, so reports stay byte-stable.
  double elapsed_ms = 0;

  bool operator==(const CheckRecord &) const = default;
};

struct AnalysisReport {
  std::string instance_id;
  std::string window;
  std::vector<CheckRecord> checks;
  /// Broken equivalences or implications between checks.
  std::vector<std::string> suite_failures;

  bool operator==(const AnalysisReport &) const = default;
  [[nodiscard]] const CheckRecord *find(const std::string &name) const;
};

struct AnalysisOptions {
  bool timings = false;
  unsigned max_arity = 3;
  /// Window elements used to sample the group of differences.
  std::size_t group_base = 8;
  unsigned quantum_nmax = 3;
};

/// Throws SchemaError when the ideal suite is requested for an instance
/// without a ring.
[[nodiscard]] AnalysisReport analyze(const Instance &inst, Suite suite,
                                     const AnalysisOptions &opts = {});

[[nodiscard]] nlohmann::json report_to_json(const AnalysisReport &r);
/// Throws SchemaError.
[[nodiscard]] AnalysisReport report_from_json(const nlohmann::json &doc);

/// Names of FailsWith checks whose witness does not re-verify against the
/// instance. Witnesses of the elementary checks are re-checked directly;
/// the rest are re-derived by running the check again.
[[nodiscard]] std::vector<std::string>
unverified_witnesses(const Instance &inst, const AnalysisReport &r, Suite suite,
                     const AnalysisOptions &opts = {});

/// 2 with suite failures, 1 with an unexpected FailsWith, else 0.
[[nodiscard]] int exit_code(const AnalysisReport &r,
                            const std::vector<std::string> &expected_failures = {});

/// One line per check plus the suite failures.
[[nodiscard]] std::string render_text(const AnalysisReport &r);

} // namespace ordalg
