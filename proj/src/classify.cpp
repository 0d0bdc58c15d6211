#include "rcchoice/classify.hpp"

#include "rcchoice/error.hpp"

namespace rcchoice {

std::string_view to_string(Verdict verdict) noexcept {
  return verdict == Verdict::Provable ? "provable" : "not_provable";
}

std::string_view to_string(Reason reason) noexcept {
  switch (reason) {
    case Reason::Diagonal: return "diagonal";
    case Reason::RC24: return "rc24";
    case Reason::Certificate: return "certificate";
  }
  return "unknown";
}

bool predicted_provable(Integer m, Integer n) noexcept { return m == n || (m == 2 && n == 4); }

Classification classify(Integer m, Integer n, const ClassifyOptions& options) {
  const std::string label = "(" + std::to_string(m) + ", " + std::to_string(n) + ")";
  if (m < 1 || n < 1) throw Error(ErrorKind::InvalidArgument, label + ": m and n must be positive");

  Classification out;
  out.m = m;
  out.n = n;
  if (predicted_provable(m, n)) {
    out.reason = m == n ? Reason::Diagonal : Reason::RC24;
    if (options.oracle && n >= 2 && n <= options.exhaustive_bound) {
      if (auto found = find_blocking_decomposition(m, n, options.exhaustive_bound)) {
        throw Error(ErrorKind::CertificateSearchFailed,
                    label + ": expected provable but exhaustive search found " + found->to_string());
      }
      out.exhaustive_checked = true;
    }
    return out;
  }
  if (n == 1) throw Error(ErrorKind::InvalidArgument, label + ": n = 1 has no decomposition into parts >= 2");

  out.verdict = Verdict::NotProvable;
  out.reason = Reason::Certificate;
  out.trace = build_certificate(m, n, CertificateOptions{options.exhaustive_bound});
  out.certificate = out.trace->decomposition;

  if (options.oracle && n <= options.exhaustive_bound) {
    auto exhaustive = find_blocking_decomposition(m, n, options.exhaustive_bound);
    if (!exhaustive || !blocks(*exhaustive, m)) {
      throw Error(ErrorKind::CertificateSearchFailed,
                  label + ": recipes found " + out.certificate->to_string() + " but exhaustive search found none");
    }
    out.exhaustive_checked = true;
  }
  out.achievable = admissible_sums(*out.certificate);
  return out;
}

}  // namespace rcchoice
