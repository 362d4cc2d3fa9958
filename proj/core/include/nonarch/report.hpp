#pragma once

#include <map>
#include <string>
#include <vector>

namespace nonarch {

/// "assumed" marks declarations taken on trust (e.g. an intersection
/// emptiness that no finite computation can settle); it does not count
/// against the verdict but is recorded so the report is honest about what
/// was checked versus assumed.
enum class CheckStatus { kPass, kFail, kAssumed };

std::string to_string(CheckStatus s);

/**
 * One verified (or assumed) claim. `name` identifies the instance
 * ("radius.gap[n=2]"), `anchor` the claim family it belongs to
 * ("theorem.radius-formula") — anchors are stable machine ids the verifier
 * dispatches on. `values` holds every number the claim rests on, as exact
 * decimal/rational strings, so the relation can be re-checked later without
 * recomputing any series.
 */
struct Check {
  std::string name;
  std::string anchor;
  CheckStatus status = CheckStatus::kPass;
  std::map<std::string, std::string> values;
  std::string detail;
};

struct Report {
  std::string witness;
  std::map<std::string, std::string> config;
  std::vector<Check> checks;

  void add(Check c) { checks.push_back(std::move(c)); }
  void add(std::string name, std::string anchor, bool pass,
           std::map<std::string, std::string> values = {}, std::string detail = "");
  void add_assumed(std::string name, std::string anchor,
                   std::map<std::string, std::string> values = {}, std::string detail = "");

  bool passed() const;
  std::size_t failed_count() const;
};

/// Deterministic JSON (object keys sorted, check order preserved). Schema
/// carries an explicit version; see schema/report.schema.json.
std::string report_to_json(const Report& report);

/// One line per check: "[pass] name (anchor) detail".
std::string report_to_text(const Report& report);

/// Inverse of report_to_json; throws std::invalid_argument on malformed or
/// version-incompatible input.
Report report_from_json(const std::string& text);

/**
 * Re-validate a report's recorded exact values by pure exponent arithmetic:
 * every check family's defining relation is recomputed from the recorded
 * strings (no series are rebuilt). Returns a fresh report about the original,
 * one re-validation check per input check.
 */
Report verify_report(const Report& report);

}  // namespace nonarch
