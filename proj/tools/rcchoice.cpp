#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "rcchoice/catalog.hpp"
#include "rcchoice/certificates.hpp"
#include "rcchoice/classify.hpp"
#include "rcchoice/cyclic_model.hpp"
#include "rcchoice/error.hpp"
#include "rcchoice/fraisse.hpp"
#include "rcchoice/numtheory.hpp"
#include "rcchoice/rc24.hpp"
#include "rcchoice/scan.hpp"
#include "rcchoice/serialize.hpp"

using namespace rcchoice;

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kUsage = 2;
constexpr int kBounds = 3;

struct Globals {
  bool json = false;
  std::string csv;
  Integer bound = kDefaultExhaustiveBound;
  bool oracle = false;
  bool timing = false;
};

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidPart:
    case ErrorKind::InvalidArgument:
    case ErrorKind::PreconditionViolated:
    case ErrorKind::BadSubset:
      return kUsage;
    case ErrorKind::BoundExceeded:
    case ErrorKind::CapExceeded:
      return kBounds;
    default:
      return kVerificationFailed;
  }
}

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

std::string braces(const std::vector<Integer>& values) {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + std::to_string(values[i]);
  return out + "}";
}

const char* ok(bool pass) { return pass ? "OK" : "FAIL"; }

int cmd_classify(const Globals& g, Integer m, Integer n) {
  ClassifyOptions options;
  options.exhaustive_bound = g.bound;
  options.oracle = g.oracle;
  const Classification c = classify(m, n, options);
  if (g.json) {
    print_json(to_json(c));
    return kOk;
  }
  std::cout << "m=" << m << " n=" << n << " verdict=" << to_string(c.verdict) << " reason=" << to_string(c.reason)
            << '\n';
  if (c.certificate) {
    std::cout << "certificate: " << c.certificate->to_string();
    if (c.trace) std::cout << " via " << to_string(c.trace->recipe);
    std::cout << '\n';
  }
  if (c.achievable) std::cout << "achievable sums: " << braces(c.achievable->values()) << '\n';
  if (c.exhaustive_checked) std::cout << "exhaustive search: agrees\n";
  return kOk;
}

void print_grid(const ScanReport& report) {
  const auto width = static_cast<std::size_t>(report.n_max - report.n_min + 1);
  std::cout << "m\\n";
  for (Integer n = report.n_min; n <= report.n_max; ++n) std::printf("%4lld", static_cast<long long>(n));
  std::cout << '\n';
  for (std::size_t r = 0; r < report.rows.size(); r += width) {
    std::printf("%3lld", static_cast<long long>(report.rows[r].m));
    for (std::size_t c = 0; c < width; ++c) {
      const auto& row = report.rows[r + c];
      const char* mark = row.verdict == Verdict::Provable ? "P" : "N";
      std::printf("%3s%s", mark, row.agrees ? " " : "!");
    }
    std::cout << '\n';
  }
  std::cout << "P = provable, N = not provable, ! = disagrees with m = n or (m, n) = (2, 4)\n";
}

int cmd_scan(const Globals& g, Integer m_max, Integer n_max, Integer from, bool constructive_only, unsigned threads) {
  ScanOptions options;
  options.m_min = from;
  options.n_min = std::max<Integer>(from, 2);
  options.m_max = m_max;
  options.n_max = n_max;
  options.exhaustive_bound = g.bound;
  options.oracle = g.oracle;
  options.constructive_only = constructive_only;
  options.threads = threads;
  options.timing = g.timing;
  const ScanReport report = scan(options);

  if (!g.csv.empty()) {
    std::ofstream out(g.csv, std::ios::binary);
    if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + g.csv);
    out << to_csv(report);
  }
  if (g.json) {
    print_json(to_json(report));
  } else {
    print_grid(report);
    std::cout << summary_line(report) << '\n';
    if (report.seconds) std::printf("time: %.3f s\n", *report.seconds);
  }
  return report.counts.agreeing == report.counts.total ? kOk : kVerificationFailed;
}

int cmd_certificate(const Globals& g, Integer m, Integer n) {
  CertificateOptions options;
  options.exhaustive_bound = g.bound;
  const RecipeTrace trace = build_certificate(m, n, options);
  const bool verified = blocks(trace.decomposition, m);
  if (g.json) {
    print_json(to_json(trace));
  } else {
    std::cout << "m=" << m << " n=" << n << " recipe=" << to_string(trace.recipe)
              << " parts=" << trace.decomposition.to_string() << '\n';
    for (const auto& line : trace.narrative) std::cout << "  " << line << '\n';
    std::cout << "blocks: " << ok(verified) << '\n';
  }
  return verified ? kOk : kVerificationFailed;
}

int cmd_model(const Globals& g, int arity, std::size_t fixed_size, const std::vector<Integer>& parts) {
  const Decomposition d(parts);
  const CyclicAutomorphism c = build_cyclic_model(arity, fixed_size, d);
  const EquivarianceReport equivariance = verify_equivariance(c);
  const bool fixed_point_free = witness_no_invariant_choice(c, d.total());
  if (g.json) {
    print_json(to_json(c, equivariance, fixed_point_free));
  } else {
    std::cout << c.dump();
    std::cout << "equivariance: " << ok(equivariance.ok) << ", fixed-point-free on cycle: " << ok(fixed_point_free)
              << '\n';
    if (!equivariance.ok) {
      std::cout << "  first violation: P=" << format_atoms(equivariance.subset) << " power=" << equivariance.power
                << '\n';
    }
  }
  return equivariance.ok && fixed_point_free ? kOk : kVerificationFailed;
}

int cmd_catalog(const Globals& g, int arity, std::size_t size) {
  const auto models = catalog_models(arity, size);
  const auto burnside = count_classes_burnside(arity, size);
  const bool agree = burnside == models.size();
  if (g.json) {
    Json j;
    j["arity"] = arity;
    j["size"] = size;
    j["classes"] = models.size();
    j["burnside"] = burnside;
    Json tables = Json::array();
    for (const auto& model : models) tables.push_back(selector_table(model));
    j["tables"] = std::move(tables);
    print_json(j);
  } else {
    std::cout << "m=" << arity << " size=" << size << " classes=" << models.size() << " burnside=" << burnside << '\n';
    for (std::size_t i = 0; i < models.size(); ++i) std::cout << "#" << i << ' ' << models[i].dump();
  }
  return agree ? kOk : kVerificationFailed;
}

int cmd_fraisse(const Globals& g, int arity, std::size_t stages, std::size_t max_atoms) {
  FraisseCaps caps;
  caps.max_atoms = max_atoms;
  const auto built = build_fraisse_stages(arity, stages, caps);
  const auto& last = built.back();
  const std::size_t base = built.size() >= 2 ? built[built.size() - 2].size() : 0;
  const bool valid = is_valid_model(last);
  const ExtensionReport extension = check_one_point_extension(last, stages, base);
  const bool embeds = embeds_all_small_models(last, stages);
  const bool pass = valid && extension.complete && embeds;
  if (g.json) {
    Json j;
    j["arity"] = arity;
    std::vector<std::size_t> sizes;
    for (const auto& stage : built) sizes.push_back(stage.size());
    j["stage_sizes"] = sizes;
    j["valid"] = valid;
    j["extensions_checked"] = extension.checked;
    j["extensions_missing"] = extension.missing.size();
    j["embeds_all_small_models"] = embeds;
    print_json(j);
  } else {
    for (std::size_t i = 0; i < built.size(); ++i) std::cout << "F" << i << ": " << built[i].size() << " atoms\n";
    std::cout << "valid model: " << ok(valid) << '\n';
    std::cout << "one-point extensions over F" << stages - 1 << " (k=" << stages << "): " << ok(extension.complete)
              << " (" << extension.checked << " checked, " << extension.missing.size() << " missing)\n";
    std::cout << "embeds every model of size <= " << stages << ": " << ok(embeds) << '\n';
  }
  return pass ? kOk : kVerificationFailed;
}

int cmd_verify_claim(const Globals& g, int q_max) {
  const GcdClaimReport report = verify_gcd_claim(q_max);
  if (g.json) {
    print_json(to_json(report));
  } else {
    for (const auto& row : report.rows) {
      std::cout << "q=" << row.q << " powers=" << row.powers << " invariant_subsets=" << row.invariant_subsets
                << " violations=" << row.violations << '\n';
    }
    std::cout << "gcd claim: " << ok(report.holds) << '\n';
  }
  return report.holds ? kOk : kVerificationFailed;
}

int cmd_verify_rc24(const Globals& g) {
  const rc24::Census census = rc24::verify_rc24();
  if (g.json) {
    print_json(to_json(census));
  } else {
    std::cout << "orientations: " << census.total << '\n'
              << "case singleton-min: " << census.singleton_min << '\n'
              << "case triple-min: " << census.triple_min << '\n'
              << "case pair-min: " << census.pair_min << '\n'
              << "|M|=4: " << census.all_minimizers << '\n'
              << "equivariance checks: " << census.equivariance_checks << '\n'
              << "failures: " << census.failures << '\n'
              << "rc24: " << ok(census.all_pass) << '\n';
  }
  return census.all_pass ? kOk : kVerificationFailed;
}

int cmd_verify_goldbach(const Globals& g, Integer n_max) {
  if (n_max > kGoldbachSearchBound) {
    throw Error(ErrorKind::BoundExceeded, "goldbach search is limited to " + std::to_string(kGoldbachSearchBound));
  }
  std::size_t checked = 0, all_odd = 0;
  std::vector<Integer> missing;
  for (Integer n = 7; n <= n_max; n += 2) {
    ++checked;
    bool found = false, odd = false;
    for_each_goldbach_triple(n, true, [&](const GoldbachTriple& t) {
      found = true;
      odd = t.all_odd();
      return false;
    });
    if (!found) missing.push_back(n);
    if (odd) ++all_odd;
  }
  const bool pass = missing.empty();
  if (g.json) {
    Json j;
    j["n_max"] = n_max;
    j["checked"] = checked;
    j["all_odd_triples"] = all_odd;
    j["missing"] = missing;
    j["holds"] = pass;
    print_json(j);
  } else {
    std::cout << "odd n in [7, " << n_max << "]: " << checked << " checked, " << all_odd
              << " with an all-odd triple, " << missing.size() << " without a triple\n";
    std::cout << "goldbach: " << ok(pass) << '\n';
  }
  return pass ? kOk : kVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide RC_m => RC_n non-implications, build blocking certificates and selector models."};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "Print JSON instead of text");
  app.add_option("--csv", g.csv, "Write the scan grid as CSV to this path");
  app.add_option("--bound", g.bound, "Largest n for exhaustive search")->check(CLI::Range(2, 127));
  app.add_flag("--oracle", g.oracle, "Cross-check every verdict with the exhaustive search");
  app.add_flag("--timing", g.timing, "Report wall-clock time");

  int status = kOk;
  Integer m = 0, n = 0;

  auto* classify_cmd = app.add_subcommand("classify", "Decide RC_m => RC_n");
  classify_cmd->add_option("m", m)->required()->check(CLI::PositiveNumber);
  classify_cmd->add_option("n", n)->required()->check(CLI::PositiveNumber);
  classify_cmd->callback([&] { status = cmd_classify(g, m, n); });

  Integer from = 2;
  bool constructive_only = false;
  unsigned threads = 0;
  auto* scan_cmd = app.add_subcommand("scan", "Classify every pair of a grid");
  scan_cmd->add_option("m_max", m)->required()->check(CLI::PositiveNumber);
  scan_cmd->add_option("n_max", n)->required()->check(CLI::Range(Integer{2}, kGoldbachSearchBound));
  scan_cmd->add_option("--from", from, "Smallest m and n")->check(CLI::Range(1, 1000000));
  scan_cmd->add_flag("--constructive-only", constructive_only, "Allow n beyond the exhaustive bound");
  scan_cmd->add_option("--threads", threads, "Worker threads (0 = all cores)");
  scan_cmd->callback([&] { status = cmd_scan(g, m, n, from, constructive_only, threads); });

  auto* certificate_cmd = app.add_subcommand("certificate", "Build and check a blocking decomposition");
  certificate_cmd->add_option("m", m)->required()->check(CLI::PositiveNumber);
  certificate_cmd->add_option("n", n)->required()->check(CLI::PositiveNumber);
  certificate_cmd->callback([&] { status = cmd_certificate(g, m, n); });

  int arity = 0;
  std::size_t fixed_size = 0;
  std::vector<Integer> parts;
  auto* model_cmd = app.add_subcommand("model", "Build the cyclic selector model for a decomposition");
  model_cmd->add_option("m", arity)->required()->check(CLI::PositiveNumber);
  model_cmd->add_option("S_size", fixed_size)->required();
  model_cmd->add_option("parts", parts)->required();
  model_cmd->callback([&] { status = cmd_model(g, arity, fixed_size, parts); });

  std::size_t size = 0;
  auto* catalog_cmd = app.add_subcommand("catalog", "Selector models of one size up to isomorphism");
  catalog_cmd->add_option("m", arity)->required()->check(CLI::PositiveNumber);
  catalog_cmd->add_option("size", size)->required();
  catalog_cmd->callback([&] { status = cmd_catalog(g, arity, size); });

  std::size_t stages = 2, max_atoms = FraisseCaps{}.max_atoms;
  auto* fraisse_cmd = app.add_subcommand("fraisse", "Build finite amalgamation stages");
  fraisse_cmd->add_option("m", arity)->required()->check(CLI::PositiveNumber);
  fraisse_cmd->add_option("stages", stages)->check(CLI::Range(1, 8));
  fraisse_cmd->add_option("--max-atoms", max_atoms);
  fraisse_cmd->callback([&] { status = cmd_fraisse(g, arity, stages, max_atoms); });

  auto* verify_cmd = app.add_subcommand("verify", "Exhaustive verification sweeps");
  verify_cmd->require_subcommand(1);
  int q_max = 12;
  auto* claim_cmd = verify_cmd->add_subcommand("claim", "Invariant subsets of cycle powers have gcd(|P|, q) > 1");
  claim_cmd->add_option("q_max", q_max)->check(CLI::Range(2, 20));
  claim_cmd->callback([&] { status = cmd_verify_claim(g, q_max); });
  auto* rc24_cmd = verify_cmd->add_subcommand("rc24", "Every orientation of a 4-set");
  rc24_cmd->callback([&] { status = cmd_verify_rc24(g); });
  Integer goldbach_max = 10'001;
  auto* goldbach_cmd = verify_cmd->add_subcommand("goldbach", "Prime triples for every odd n in [7, n_max]");
  goldbach_cmd->add_option("n_max", goldbach_max)->check(CLI::PositiveNumber);
  goldbach_cmd->callback([&] { status = cmd_verify_goldbach(g, goldbach_max); });

  for (auto* sub : {classify_cmd, scan_cmd, certificate_cmd, model_cmd, catalog_cmd, fraisse_cmd}) sub->fallthrough();
  verify_cmd->fallthrough();
  for (auto* sub : {claim_cmd, rc24_cmd, goldbach_cmd}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
  return status;
}
