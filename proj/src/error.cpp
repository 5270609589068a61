#include "finord/error.hpp"

namespace finord {

const char* errc_name(errc code) {
  switch (code) {
    case errc::duplicate_label: return "DuplicateLabel";
    case errc::unknown_label: return "UnknownLabel";
    case errc::antisymmetry_violation: return "AntisymmetryViolation";
    case errc::not_monotone: return "NotMonotone";
    case errc::not_a_lattice: return "NotALattice";
    case errc::not_distributive: return "NotDistributive";
    case errc::not_sup_preserving: return "NotSupPreserving";
    case errc::not_a_homomorphism: return "NotAHomomorphism";
    case errc::not_a_distributor: return "NotADistributor";
    case errc::object_mismatch: return "ObjectMismatch";
    case errc::not_idempotent: return "NotIdempotent";
    case errc::not_an_adjunction: return "NotAnAdjunction";
    case errc::size_overflow: return "SizeOverflow";
    case errc::bound_exceeded: return "BoundExceeded";
    case errc::parse_error: return "ParseError";
    case errc::internal_verification_failure: return "InternalVerificationFailure";
  }
  return "UnknownError";
}

error::error(errc code, const std::string& message, std::vector<std::string> witness)
    : std::runtime_error(std::string("[") + errc_name(code) + "] " + message),
      code_(code),
      witness_(std::move(witness)) {}

void fail(errc code, const std::string& message, std::vector<std::string> witness) {
  throw error(code, message, std::move(witness));
}

}  // namespace finord
