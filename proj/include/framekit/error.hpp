#pragma once

#include <stdexcept>
#include <string>

namespace framekit {

// Error codes mirror the failure modes of the public API. Every throwing
// operation documents which of these it can raise.
enum class errc {
  not_prime,
  not_prime_power,
  overflow,
  field_cap_exceeded,
  degree_mismatch,
  not_primitive,
  search_budget_exceeded,
  duplicate_exponents,
  not_flat,
  not_picket_fence,
  too_many_removed,
  too_few_vectors,
  dim_mismatch,
  shape_mismatch,
  prereq_failed,
  dim_too_large,
  invalid_argument,
  parse_error,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::not_prime: return "NotPrime";
    case errc::not_prime_power: return "NotPrimePower";
    case errc::overflow: return "Overflow";
    case errc::field_cap_exceeded: return "FieldCapExceeded";
    case errc::degree_mismatch: return "DegreeMismatch";
    case errc::not_primitive: return "NotPrimitive";
    case errc::search_budget_exceeded: return "SearchBudgetExceeded";
    case errc::duplicate_exponents: return "DuplicateExponents";
    case errc::not_flat: return "NotFlat";
    case errc::not_picket_fence: return "NotPicketFence";
    case errc::too_many_removed: return "TooManyRemoved";
    case errc::too_few_vectors: return "TooFewVectors";
    case errc::dim_mismatch: return "DimMismatch";
    case errc::shape_mismatch: return "ShapeMismatch";
    case errc::prereq_failed: return "PrereqFailed";
    case errc::dim_too_large: return "DimTooLarge";
    case errc::invalid_argument: return "InvalidArgument";
    case errc::parse_error: return "ParseError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace framekit
