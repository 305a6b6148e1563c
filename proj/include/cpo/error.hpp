#pragma once

#include <stdexcept>
#include <string>

namespace cpo {

// One code per failure kind that can cross the library boundary.
enum class ErrorCode {
  Parse,
  NoIdentity,
  NotAssociative,
  NotPermutationTable,
  ActionNotHomomorphism,
  ActionNotTransitive,
  NotASubgroup,
  NotNormalized,
  NotSValued,
  CocycleIdentityViolated,
  SubgroupClosureFailure,
  NotWellDefined,
  NotPartialOrder,
  NotDVR,
  PrimaryNotAsserted,
  NotAnOrbit,
  SetupMismatch,
  Infeasible,
  CapExhausted,
  DivisionByZero,
  ZeroElement,
  NotAUnit,
  InternalInconsistency,
  InvalidArgument,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) +
                           (what.empty() ? "" : " " + what)),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cpo
