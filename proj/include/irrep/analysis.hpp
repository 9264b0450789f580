#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "irrep/catalog.hpp"
#include "irrep/report.hpp"

namespace irrep {

/// Character tables beyond this many classes are not attempted.
inline constexpr std::size_t kMaxOracleClasses = 1000;

struct AnalysisOptions {
  std::string name;
  std::size_t max_order = kDefaultMaxOrder;
  double tolerance = kDefaultTolerance;
  bool construct_rep = false;
  /// Extra automorphisms; when set (even to an empty block) the
  /// automorphism-group variant runs as well.
  std::optional<std::string> autos_text;
};

/// Full pipeline: build, socle, criterion, oracle, then the optional
/// automorphism variant and explicit representation. Errors are rethrown
/// with the failing stage prefixed to the message, keeping their category.
AnalysisReport analyze(std::string_view spec_text, const AnalysisOptions& options = {});

/// Exit-code view of a report: true when every computed verdict agrees.
bool fully_agrees(const AnalysisReport& r);

struct BatchOptions {
  std::size_t max_order = kDefaultMaxOrder;
  double tolerance = kDefaultTolerance;
  bool construct_rep = false;
  std::size_t parallel = 1;
  std::string json_dir;  // empty: no per-entry files
};

struct BatchEntryResult {
  std::string name;
  std::optional<AnalysisReport> report;
  std::string error;
  bool consistency_error = false;
  bool expectation_met = true;
  double seconds = 0;

  bool passed() const { return report && error.empty() && expectation_met && fully_agrees(*report); }
};

struct BatchSummary {
  std::vector<BatchEntryResult> entries;  // sorted by name
  std::size_t failures = 0;
  double seconds = 0;
};

BatchSummary batch_run(const std::vector<CatalogEntry>& catalog, const BatchOptions& options);

/// Fixed-width summary table, one row per entry.
std::string format_summary(const BatchSummary& s);

}  // namespace irrep
