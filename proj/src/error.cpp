#include "rcchoice/error.hpp"

namespace rcchoice {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidPart: return "InvalidPart";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::EmptyResult: return "EmptyResult";
    case ErrorKind::NoSuchPrime: return "NoSuchPrime";
    case ErrorKind::BranchExhausted: return "BranchExhausted";
    case ErrorKind::CertificateSearchFailed: return "CertificateSearchFailed";
    case ErrorKind::NotBlocking: return "NotBlocking";
    case ErrorKind::OrbitConflict: return "OrbitConflict";
    case ErrorKind::BadSubset: return "BadSubset";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace rcchoice
