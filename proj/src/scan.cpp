#include "rcchoice/scan.hpp"

#include <boost/algorithm/string.hpp>
#include <boost/lexical_cast.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <mutex>
#include <thread>

#include "rcchoice/error.hpp"

namespace rcchoice {

namespace {

ScanRow row_of(const Classification& c) {
  ScanRow row;
  row.m = c.m;
  row.n = c.n;
  row.verdict = c.verdict;
  if (c.verdict == Verdict::Provable) {
    row.recipe = std::string(to_string(c.reason));
  } else {
    row.recipe = c.trace ? std::string(to_string(c.trace->recipe)) : std::string(to_string(c.reason));
    const auto parts = c.certificate->parts();
    row.parts.assign(parts.begin(), parts.end());
  }
  row.agrees = (c.verdict == Verdict::Provable) == predicted_provable(c.m, c.n);
  return row;
}

Integer parse_integer(const std::string& text) {
  try {
    return boost::lexical_cast<Integer>(text);
  } catch (const boost::bad_lexical_cast&) {
    throw Error(ErrorKind::InvalidArgument, "not an integer: '" + text + "'");
  }
}

}  // namespace

double ScanCounts::agreement_percent() const noexcept {
  return total == 0 ? 100.0 : 100.0 * static_cast<double>(agreeing) / static_cast<double>(total);
}

bool ScanReport::same_results(const ScanReport& other) const {
  return m_min == other.m_min && m_max == other.m_max && n_min == other.n_min && n_max == other.n_max &&
         rows == other.rows && counts == other.counts;
}

ScanCounts tally(const std::vector<ScanRow>& rows) {
  ScanCounts counts;
  for (const auto& row : rows) {
    ++counts.total;
    ++(row.verdict == Verdict::Provable ? counts.provable : counts.not_provable);
    if (row.agrees) ++counts.agreeing;
  }
  return counts;
}

ScanReport scan(const ScanOptions& options) {
  if (options.m_min < 1 || options.n_min < 2 || options.m_max < options.m_min || options.n_max < options.n_min) {
    throw Error(ErrorKind::InvalidArgument, "scan needs 1 <= m_min <= m_max and 2 <= n_min <= n_max");
  }
  if (!options.constructive_only && options.n_max > options.exhaustive_bound) {
    throw Error(ErrorKind::BoundExceeded, "n_max " + std::to_string(options.n_max) + " exceeds the exhaustive bound " +
                                              std::to_string(options.exhaustive_bound));
  }
  const auto start = std::chrono::steady_clock::now();

  ScanReport report;
  report.m_min = options.m_min;
  report.m_max = options.m_max;
  report.n_min = options.n_min;
  report.n_max = options.n_max;
  const auto width = static_cast<std::size_t>(options.n_max - options.n_min + 1);
  const auto cells = static_cast<std::size_t>(options.m_max - options.m_min + 1) * width;
  report.rows.resize(cells);

  ClassifyOptions classify_options;
  classify_options.exhaustive_bound = options.exhaustive_bound;
  classify_options.oracle = options.oracle;

  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::size_t first_error_cell = cells;
  std::mutex error_mutex;

  auto work = [&] {
    for (std::size_t cell = next++; cell < cells && !failed; cell = next++) {
      const Integer m = options.m_min + static_cast<Integer>(cell / width);
      const Integer n = options.n_min + static_cast<Integer>(cell % width);
      try {
        report.rows[cell] = row_of(classify(m, n, classify_options));
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (cell < first_error_cell) {
          first_error_cell = cell;
          first_error = std::current_exception();
        }
        failed = true;
      }
    }
  };

  unsigned threads = options.threads != 0 ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, cells));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
    work();
  }
  if (first_error) std::rethrow_exception(first_error);

  report.counts = tally(report.rows);
  if (options.timing) {
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  return report;
}

std::string to_csv(const ScanReport& report) {
  std::string out = "m,n,verdict,recipe,parts\n";
  for (const auto& row : report.rows) {
    out += std::to_string(row.m) + ',' + std::to_string(row.n) + ',' + std::string(to_string(row.verdict)) + ',' +
           row.recipe + ',';
    for (std::size_t i = 0; i < row.parts.size(); ++i) {
      if (i) out += '+';
      out += std::to_string(row.parts[i]);
    }
    out += '\n';
  }
  return out;
}

ScanReport scan_from_csv(std::string_view csv) {
  std::vector<std::string> lines;
  boost::split(lines, csv, boost::is_any_of("\n"));
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty() || boost::trim_copy(lines.front()) != "m,n,verdict,recipe,parts") {
    throw Error(ErrorKind::InvalidArgument, "missing CSV header m,n,verdict,recipe,parts");
  }

  ScanReport report;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::vector<std::string> fields;
    boost::split(fields, boost::trim_copy(lines[i]), boost::is_any_of(","));
    if (fields.size() != 5) {
      throw Error(ErrorKind::InvalidArgument, "CSV line " + std::to_string(i + 1) + " does not have 5 fields");
    }
    ScanRow row;
    row.m = parse_integer(fields[0]);
    row.n = parse_integer(fields[1]);
    if (fields[2] == to_string(Verdict::Provable)) {
      row.verdict = Verdict::Provable;
    } else if (fields[2] == to_string(Verdict::NotProvable)) {
      row.verdict = Verdict::NotProvable;
    } else {
      throw Error(ErrorKind::InvalidArgument, "unknown verdict '" + fields[2] + "'");
    }
    row.recipe = fields[3];
    if (!fields[4].empty()) {
      std::vector<std::string> parts;
      boost::split(parts, fields[4], boost::is_any_of("+"));
      for (const auto& p : parts) row.parts.push_back(parse_integer(p));
    }
    row.agrees = (row.verdict == Verdict::Provable) == predicted_provable(row.m, row.n);
    report.rows.push_back(std::move(row));
  }
  if (!report.rows.empty()) {
    auto [m_lo, m_hi] = std::minmax_element(report.rows.begin(), report.rows.end(),
                                            [](const ScanRow& a, const ScanRow& b) { return a.m < b.m; });
    auto [n_lo, n_hi] = std::minmax_element(report.rows.begin(), report.rows.end(),
                                            [](const ScanRow& a, const ScanRow& b) { return a.n < b.n; });
    report.m_min = m_lo->m;
    report.m_max = m_hi->m;
    report.n_min = n_lo->n;
    report.n_max = n_hi->n;
  }
  report.counts = tally(report.rows);
  return report;
}

std::string summary_line(const ScanReport& report) {
  char percent[32];
  std::snprintf(percent, sizeof percent, "%.2f", report.counts.agreement_percent());
  return "agreement: " + std::string(percent) + "% (" + std::to_string(report.counts.agreeing) + "/" +
         std::to_string(report.counts.total) + "), provable " + std::to_string(report.counts.provable) +
         ", not_provable " + std::to_string(report.counts.not_provable);
}

}  // namespace rcchoice
