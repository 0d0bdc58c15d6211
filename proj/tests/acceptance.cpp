// One line per acceptance criterion; exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "oracles.hpp"
#include "rcchoice/cyclic_model.hpp"
#include "rcchoice/error.hpp"
#include "rcchoice/fraisse.hpp"
#include "rcchoice/rc24.hpp"
#include "rcchoice/scan.hpp"

using namespace rcchoice;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void run(int id, const char* title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = body();
  } catch (const std::exception& e) {
    outcome = {false, std::string("exception: ") + e.what()};
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (seconds > limit_seconds) {
    outcome.pass = false;
    outcome.detail += " (over the " + std::to_string(static_cast<int>(limit_seconds)) + " s limit)";
  }
  if (!outcome.pass) ++failures;
  std::printf("[%s] %d. %s: %s [%.3f s]\n", outcome.pass ? "PASS" : "FAIL", id, title, outcome.detail.c_str(), seconds);
  std::fflush(stdout);
}

Outcome grid() {
  ScanOptions options;
  options.m_max = 50;
  options.n_max = 50;
  options.oracle = true;
  const ScanReport report = scan(options);
  std::size_t bad = 0;
  for (const auto& row : report.rows) {
    const bool provable = row.m == row.n || (row.m == 2 && row.n == 4);
    if ((row.verdict == Verdict::Provable) != provable) ++bad;
    if (!provable) {
      if (row.parts.empty() || !blocks(Decomposition(row.parts), row.m)) ++bad;
    }
  }
  std::size_t goldbach_missing = 0;
  for (Integer n = 7; n <= 50; n += 2) {
    if (goldbach_triples(n, true).empty()) ++goldbach_missing;
  }
  Outcome o;
  o.pass = report.rows.size() == 2401 && bad == 0 && report.counts.agreeing == report.counts.total &&
           goldbach_missing == 0;
  o.detail = std::to_string(report.rows.size()) + " pairs, " + summary_line(report) + ", " + std::to_string(bad) +
             " bad cells";
  return o;
}

Outcome fact_rc24() {
  const auto c = rc24::verify_rc24();
  Outcome o;
  o.pass = c.all_pass && c.total == 64 && c.singleton_min + c.triple_min + c.pair_min == 64 && c.all_minimizers == 0 &&
           c.equivariance_checks == 64 * 24 && c.failures == 0;
  o.detail = "64 orientations: singleton " + std::to_string(c.singleton_min) + ", triple " +
             std::to_string(c.triple_min) + ", pair " + std::to_string(c.pair_min) + ", |M|=4 " +
             std::to_string(c.all_minimizers) + ", equivariance checks " + std::to_string(c.equivariance_checks);
  return o;
}

Outcome gcd_claim() {
  const auto report = verify_gcd_claim(12);
  std::size_t subsets = 0, violations = 0;
  for (const auto& row : report.rows) {
    subsets += row.invariant_subsets;
    violations += row.violations;
  }
  Outcome o;
  o.pass = report.holds && report.rows.size() == 11 && violations == 0;
  o.detail = "q <= 12, " + std::to_string(subsets) + " invariant (power, subset) pairs, " + std::to_string(violations) + " violations";
  return o;
}

Outcome cross_validation() {
  std::size_t pairs = 0, disagreements = 0, unverified = 0;
  for (Integer m = 2; m <= 50; ++m) {
    for (Integer n = 2; n <= 50; ++n) {
      if (m == n || (m == 2 && n == 4)) continue;
      ++pairs;
      bool constructive = false;
      try {
        const auto t = build_certificate(m, n);
        constructive = true;
        if (!blocks(t.decomposition, m) || t.decomposition.total() != n) ++unverified;
      } catch (const Error&) {
      }
      if (constructive != find_blocking_decomposition(m, n).has_value()) ++disagreements;
    }
  }
  Outcome o;
  o.pass = disagreements == 0 && unverified == 0;
  o.detail = std::to_string(pairs) + " pairs, " + std::to_string(disagreements) + " disagreements, " +
             std::to_string(unverified) + " unverified certificates";
  return o;
}

Outcome model_oracle() {
  std::size_t cases = 0, built = 0, mismatches = 0;
  for (long n = 2; n <= 10; ++n) {
    for (const auto& p : oracle::partitions(n)) {
      const Decomposition d(std::vector<Integer>(p.begin(), p.end()));
      for (int m = 1; m <= 10; ++m) {
        for (std::size_t s = 0; s <= 2; ++s) {
          ++cases;
          bool ok = false;
          try {
            const auto c = build_cyclic_model(m, s, d);
            ok = true;
            ++built;
            if (!is_valid_model(c.model()) || !verify_equivariance(c).ok || !witness_no_invariant_choice(c, n)) {
              ++mismatches;
            }
          } catch (const Error& e) {
            if (e.kind() != ErrorKind::NotBlocking) ++mismatches;
          }
          if (ok != blocks(d, m)) ++mismatches;
        }
      }
    }
  }
  Outcome o;
  o.pass = mismatches == 0;
  o.detail = std::to_string(cases) + " cases, " + std::to_string(built) + " models built and verified, " +
             std::to_string(mismatches) + " mismatches";
  return o;
}

Outcome subset_sums() {
  std::size_t partitions = 0, mismatches = 0;
  for (long n = 1; n <= 14; ++n) {
    for (const auto& p : oracle::partitions(n)) {
      ++partitions;
      const auto expected = oracle::cartesian_sums(p);
      const auto got = admissible_sums(Decomposition(std::vector<Integer>(p.begin(), p.end()))).values();
      if (std::vector<long>(expected.begin(), expected.end()) != std::vector<long>(got.begin(), got.end())) {
        ++mismatches;
      }
    }
  }
  Outcome o;
  o.pass = mismatches == 0 && partitions > 0;
  o.detail = std::to_string(partitions) + " partitions of n <= 14, " + std::to_string(mismatches) + " mismatches";
  return o;
}

Outcome fraisse() {
  const auto stages = build_fraisse_stages(2, 2);
  const auto& top = stages.back();
  const auto extension = check_one_point_extension(top, 2, stages[1].size());
  const bool valid = is_valid_model(top);
  const bool embeds = embeds_all_small_models(top, 2);
  Outcome o;
  o.pass = valid && extension.complete && embeds;
  o.detail = "F2 has " + std::to_string(top.size()) + " atoms, valid " + (valid ? "yes" : "no") + ", " +
             std::to_string(extension.checked) + " extensions checked, " + std::to_string(extension.missing.size()) +
             " missing, small models embed " + (embeds ? "yes" : "no");
  return o;
}

}  // namespace

int main() {
  run(1, "classification grid 2..50", 300, grid);
  run(2, "RC2 => RC4 exhaustion", 1, fact_rc24);
  run(3, "gcd claim q <= 12", 10, gcd_claim);
  run(4, "constructive vs exhaustive 2..50", 300, cross_validation);
  run(5, "cyclic model oracle n, m <= 10", 120, model_oracle);
  run(6, "admissible sums vs brute force n <= 14", 300, subset_sums);
  run(7, "two amalgamation stages for m = 2", 300, fraisse);
  std::printf("%d of 7 criteria failed\n", failures);
  return failures;
}
