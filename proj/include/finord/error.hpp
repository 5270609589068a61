#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace finord {

enum class errc {
  duplicate_label,
  unknown_label,
  antisymmetry_violation,
  not_monotone,
  not_a_lattice,
  not_distributive,
  not_sup_preserving,
  not_a_homomorphism,
  not_a_distributor,
  object_mismatch,
  not_idempotent,
  not_an_adjunction,
  size_overflow,
  bound_exceeded,
  parse_error,
  internal_verification_failure,
};

const char* errc_name(errc code);

/** Domain error carrying a machine-readable code and the witnessing labels, if any. */
class error : public std::runtime_error {
public:
  error(errc code, const std::string& message, std::vector<std::string> witness = {});

  errc code() const { return code_; }
  const std::vector<std::string>& witness() const { return witness_; }

private:
  errc code_;
  std::vector<std::string> witness_;
};

[[noreturn]] void fail(errc code, const std::string& message,
                       std::vector<std::string> witness = {});

}  // namespace finord
