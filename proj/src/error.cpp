#include "grouplie/error.hpp"

namespace grouplie {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::NoInverse: return "NoInverse";
    case ErrorCode::BadTable: return "BadTable";
    case ErrorCode::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::NotHomomorphism: return "NotHomomorphism";
    case ErrorCode::NotInvolutive: return "NotInvolutive";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ConductorMismatch: return "ConductorMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::PrimeSearchFailed: return "PrimeSearchFailed";
    case ErrorCode::LiftInconsistent: return "LiftInconsistent";
    case ErrorCode::IndicatorOutOfRange: return "IndicatorOutOfRange";
    case ErrorCode::PartnerNotFound: return "PartnerNotFound";
    case ErrorCode::AlphaNotReal: return "AlphaNotReal";
    case ErrorCode::GroupMismatch: return "GroupMismatch";
    case ErrorCode::IncompatiblePair: return "IncompatiblePair";
    case ErrorCode::CentralityFailed: return "CentralityFailed";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::TruncationInsufficient: return "TruncationInsufficient";
    case ErrorCode::UsageError: return "UsageError";
    case ErrorCode::InputError: return "InputError";
  }
  return "Unknown";
}

}  // namespace grouplie
