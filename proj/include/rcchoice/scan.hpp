#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rcchoice/classify.hpp"

namespace rcchoice {

struct ScanOptions {
  Integer m_min = 2;
  Integer m_max = 2;
  Integer n_min = 2;
  Integer n_max = 2;
  Integer exhaustive_bound = kDefaultExhaustiveBound;
  bool oracle = false;
  /// Allow n beyond the exhaustive bound; certificates then come from the
  /// recipes alone.
  bool constructive_only = false;
  /// 0 picks the hardware concurrency.
  unsigned threads = 0;
  bool timing = false;
};

/// One cell. recipe is the certificate recipe for NotProvable rows and the
/// reason ("diagonal", "rc24") for Provable ones; parts is empty for the
/// latter.
struct ScanRow {
  Integer m = 0;
  Integer n = 0;
  Verdict verdict = Verdict::Provable;
  std::string recipe;
  std::vector<Integer> parts;
  /// verdict == predicted_provable(m, n)
  bool agrees = true;

  friend bool operator==(const ScanRow&, const ScanRow&) = default;
};

struct ScanCounts {
  std::size_t total = 0;
  std::size_t provable = 0;
  std::size_t not_provable = 0;
  std::size_t agreeing = 0;

  double agreement_percent() const noexcept;
  friend bool operator==(const ScanCounts&, const ScanCounts&) = default;
};

struct ScanReport {
  Integer m_min = 0, m_max = 0, n_min = 0, n_max = 0;
  std::vector<ScanRow> rows;  // m-major, then n
  ScanCounts counts;
  std::optional<double> seconds;

  /// Ignores seconds.
  bool same_results(const ScanReport& other) const;
};

ScanCounts tally(const std::vector<ScanRow>& rows);

/// Classifies every pair of the grid in parallel; rows come back in grid
/// order. Throws Error(InvalidArgument) on an empty or non-positive range and
/// Error(BoundExceeded) when n_max exceeds the exhaustive bound without
/// constructive_only. The first failing cell's error is rethrown.
ScanReport scan(const ScanOptions& options);

/// Header "m,n,verdict,recipe,parts"; parts joined by '+'.
std::string to_csv(const ScanReport& report);
/// Ranges are taken from the rows; counts are recomputed. Throws
/// Error(InvalidArgument) on malformed input.
ScanReport scan_from_csv(std::string_view csv);

/// "agreement: 100.00% (2401/2401), provable 49, not_provable 2352"
std::string summary_line(const ScanReport& report);

}  // namespace rcchoice
