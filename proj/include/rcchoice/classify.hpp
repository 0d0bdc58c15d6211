#pragma once

#include <optional>
#include <string_view>

#include "rcchoice/certificates.hpp"
#include "rcchoice/decomposition.hpp"

namespace rcchoice {

enum class Verdict { Provable, NotProvable };
enum class Reason { Diagonal, RC24, Certificate };

std::string_view to_string(Verdict verdict) noexcept;
std::string_view to_string(Reason reason) noexcept;

/// Verdict for "RC_m implies RC_n". A NotProvable verdict always carries a
/// decomposition of n that blocks m.
struct Classification {
  Integer m = 0;
  Integer n = 0;
  Verdict verdict = Verdict::Provable;
  Reason reason = Reason::Diagonal;
  std::optional<Decomposition> certificate;
  std::optional<AdmissibleSumSet> achievable;
  /// Present when the constructive recipes ran.
  std::optional<RecipeTrace> trace;
  /// True when the exhaustive search also ran and agreed.
  bool exhaustive_checked = false;
};

struct ClassifyOptions {
  Integer exhaustive_bound = kDefaultExhaustiveBound;
  /// Run the exhaustive search next to the recipes whenever n is within the
  /// bound, and fail on disagreement.
  bool oracle = false;
};

/// m = n or (m, n) = (2, 4).
bool predicted_provable(Integer m, Integer n) noexcept;

/// m, n >= 1. Throws Error(InvalidArgument) for n = 1 < m, since 1 has no
/// decomposition into parts >= 2, and Error(CertificateSearchFailed) if the
/// exhaustive search and the recipes disagree.
Classification classify(Integer m, Integer n, const ClassifyOptions& options = {});

}  // namespace rcchoice
