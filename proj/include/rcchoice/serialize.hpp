#pragma once

#include <nlohmann/json.hpp>

#include "rcchoice/classify.hpp"
#include "rcchoice/cyclic_model.hpp"
#include "rcchoice/rc24.hpp"
#include "rcchoice/scan.hpp"

namespace rcchoice {

using Json = nlohmann::ordered_json;

// Field order is fixed so that dumps are byte-stable. Every *_from_json
// throws Error(InvalidArgument) on a missing or mistyped field.

/// {m, n, verdict, reason, certificate?: {parts}, achievable_sums?}
Json to_json(const Classification& c);
/// The trace is not serialized and comes back empty.
Classification classification_from_json(const Json& j);

/// {m, n, recipe, parts, narrative, verified}
Json to_json(const RecipeTrace& trace);
RecipeTrace trace_from_json(const Json& j);

/// {total, case_singleton_min, case_triple_min, case_pair_min,
///  all_minimizers, equivariance_checks, failures, all_pass}
Json to_json(const rc24::Census& census);
rc24::Census census_from_json(const Json& j);

/// {m_range, n_range, rows, summary, seconds?}
Json to_json(const ScanReport& report);
ScanReport scan_from_json(const Json& j);

Json to_json(const GcdClaimReport& report);

/// {arity, domain, fixed, cycles, sel: [{subset, choice}], equivariance,
///  fixed_point_free}
Json to_json(const CyclicAutomorphism& c, const EquivarianceReport& equivariance, bool fixed_point_free);

}  // namespace rcchoice
