#include "rcchoice/serialize.hpp"

#include "rcchoice/error.hpp"

namespace rcchoice {

namespace {

template <typename T>
T field(const Json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("JSON field '") + key + "': " + e.what());
  }
}

Json parts_of(const Decomposition& d) { return Json(std::vector<Integer>(d.parts().begin(), d.parts().end())); }

Verdict verdict_from(const std::string& s) {
  if (s == to_string(Verdict::Provable)) return Verdict::Provable;
  if (s == to_string(Verdict::NotProvable)) return Verdict::NotProvable;
  throw Error(ErrorKind::InvalidArgument, "unknown verdict '" + s + "'");
}

Reason reason_from(const std::string& s) {
  for (Reason r : {Reason::Diagonal, Reason::RC24, Reason::Certificate}) {
    if (s == to_string(r)) return r;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown reason '" + s + "'");
}

Json range(Integer lo, Integer hi) { return Json::array({lo, hi}); }

}  // namespace

Json to_json(const Classification& c) {
  Json j;
  j["m"] = c.m;
  j["n"] = c.n;
  j["verdict"] = to_string(c.verdict);
  j["reason"] = to_string(c.reason);
  if (c.certificate) {
    Json cert;
    cert["parts"] = parts_of(*c.certificate);
    if (c.trace) cert["recipe"] = to_string(c.trace->recipe);
    j["certificate"] = std::move(cert);
  }
  if (c.achievable) j["achievable_sums"] = c.achievable->values();
  return j;
}

Classification classification_from_json(const Json& j) {
  Classification c;
  c.m = field<Integer>(j, "m");
  c.n = field<Integer>(j, "n");
  c.verdict = verdict_from(field<std::string>(j, "verdict"));
  c.reason = reason_from(field<std::string>(j, "reason"));
  if (j.contains("certificate")) c.certificate = Decomposition(field<std::vector<Integer>>(j["certificate"], "parts"));
  if (j.contains("achievable_sums")) {
    if (!c.certificate) throw Error(ErrorKind::InvalidArgument, "achievable_sums without a certificate");
    boost::dynamic_bitset<> bits(static_cast<std::size_t>(c.certificate->total() + 1));
    for (Integer s : field<std::vector<Integer>>(j, "achievable_sums")) {
      if (s < 0 || s > c.certificate->total()) throw Error(ErrorKind::InvalidArgument, "achievable sum out of range");
      bits.set(static_cast<std::size_t>(s));
    }
    c.achievable = AdmissibleSumSet(std::move(bits));
  }
  return c;
}

Json to_json(const RecipeTrace& trace) {
  Json j;
  j["m"] = trace.m;
  j["n"] = trace.n;
  j["recipe"] = to_string(trace.recipe);
  j["parts"] = parts_of(trace.decomposition);
  j["narrative"] = trace.narrative;
  j["verified"] = blocks(trace.decomposition, trace.m);
  return j;
}

RecipeTrace trace_from_json(const Json& j) {
  RecipeTrace t;
  t.m = field<Integer>(j, "m");
  t.n = field<Integer>(j, "n");
  const auto name = field<std::string>(j, "recipe");
  const auto recipe = recipe_from_string(name);
  if (!recipe) throw Error(ErrorKind::InvalidArgument, "unknown recipe '" + name + "'");
  t.recipe = *recipe;
  t.decomposition = Decomposition(field<std::vector<Integer>>(j, "parts"));
  t.narrative = field<std::vector<std::string>>(j, "narrative");
  return t;
}

Json to_json(const rc24::Census& census) {
  Json j;
  j["total"] = census.total;
  j["case_singleton_min"] = census.singleton_min;
  j["case_triple_min"] = census.triple_min;
  j["case_pair_min"] = census.pair_min;
  j["all_minimizers"] = census.all_minimizers;
  j["equivariance_checks"] = census.equivariance_checks;
  j["failures"] = census.failures;
  j["all_pass"] = census.all_pass;
  return j;
}

rc24::Census census_from_json(const Json& j) {
  rc24::Census c;
  c.total = field<std::size_t>(j, "total");
  c.singleton_min = field<std::size_t>(j, "case_singleton_min");
  c.triple_min = field<std::size_t>(j, "case_triple_min");
  c.pair_min = field<std::size_t>(j, "case_pair_min");
  c.all_minimizers = field<std::size_t>(j, "all_minimizers");
  c.equivariance_checks = field<std::size_t>(j, "equivariance_checks");
  c.failures = field<std::size_t>(j, "failures");
  c.all_pass = field<bool>(j, "all_pass");
  return c;
}

Json to_json(const ScanReport& report) {
  Json j;
  j["m_range"] = range(report.m_min, report.m_max);
  j["n_range"] = range(report.n_min, report.n_max);
  Json rows = Json::array();
  for (const auto& row : report.rows) {
    Json r;
    r["m"] = row.m;
    r["n"] = row.n;
    r["verdict"] = to_string(row.verdict);
    r["recipe"] = row.recipe;
    r["parts"] = row.parts;
    r["agrees"] = row.agrees;
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  Json summary;
  summary["total"] = report.counts.total;
  summary["provable"] = report.counts.provable;
  summary["not_provable"] = report.counts.not_provable;
  summary["agreeing"] = report.counts.agreeing;
  summary["agreement_percent"] = report.counts.agreement_percent();
  j["summary"] = std::move(summary);
  if (report.seconds) j["seconds"] = *report.seconds;
  return j;
}

ScanReport scan_from_json(const Json& j) {
  ScanReport report;
  const auto m_range = field<std::vector<Integer>>(j, "m_range");
  const auto n_range = field<std::vector<Integer>>(j, "n_range");
  if (m_range.size() != 2 || n_range.size() != 2) throw Error(ErrorKind::InvalidArgument, "ranges need two ends");
  report.m_min = m_range[0];
  report.m_max = m_range[1];
  report.n_min = n_range[0];
  report.n_max = n_range[1];
  for (const auto& r : field<Json>(j, "rows")) {
    ScanRow row;
    row.m = field<Integer>(r, "m");
    row.n = field<Integer>(r, "n");
    row.verdict = verdict_from(field<std::string>(r, "verdict"));
    row.recipe = field<std::string>(r, "recipe");
    row.parts = field<std::vector<Integer>>(r, "parts");
    row.agrees = field<bool>(r, "agrees");
    report.rows.push_back(std::move(row));
  }
  const auto& s = j.at("summary");
  report.counts.total = field<std::size_t>(s, "total");
  report.counts.provable = field<std::size_t>(s, "provable");
  report.counts.not_provable = field<std::size_t>(s, "not_provable");
  report.counts.agreeing = field<std::size_t>(s, "agreeing");
  if (j.contains("seconds")) report.seconds = field<double>(j, "seconds");
  return report;
}

Json to_json(const GcdClaimReport& report) {
  Json j;
  j["holds"] = report.holds;
  Json rows = Json::array();
  for (const auto& row : report.rows) {
    Json r;
    r["q"] = row.q;
    r["powers"] = row.powers;
    r["invariant_subsets"] = row.invariant_subsets;
    r["violations"] = row.violations;
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  return j;
}

Json to_json(const CyclicAutomorphism& c, const EquivarianceReport& equivariance, bool fixed_point_free) {
  const auto& model = c.model();
  Json j;
  j["arity"] = model.arity();
  j["domain"] = std::vector<Atom>(model.domain().begin(), model.domain().end());
  j["fixed"] = c.fixed();
  j["cycles"] = c.cycles();
  Json sel = Json::array();
  model.for_each_subset([&](std::span<const Atom> subset, std::optional<Atom> chosen) {
    Json entry;
    entry["subset"] = std::vector<Atom>(subset.begin(), subset.end());
    entry["choice"] = chosen ? Json(*chosen) : Json(nullptr);
    sel.push_back(std::move(entry));
  });
  j["sel"] = std::move(sel);
  j["equivariance"] = equivariance.ok;
  j["fixed_point_free"] = fixed_point_free;
  return j;
}

}  // namespace rcchoice
