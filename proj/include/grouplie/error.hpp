#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace grouplie {

enum class ErrorCode {
  // group-core
  NotAssociative,
  NoIdentity,
  NoInverse,
  BadTable,
  OrderCapExceeded,
  UnknownName,
  BadParameters,
  NotHomomorphism,
  NotInvolutive,
  // exact-field
  DivisionByZero,
  ConductorMismatch,
  DimensionMismatch,
  // char-table
  PrimeSearchFailed,
  LiftInconsistent,
  // indicators
  IndicatorOutOfRange,
  PartnerNotFound,
  AlphaNotReal,
  // lie-structure
  GroupMismatch,
  IncompatiblePair,
  CentralityFailed,
  // verify
  VerificationFailed,
  // bessel
  TruncationInsufficient,
  // cli
  UsageError,
  InputError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace grouplie
