#include "lcmlab/error.hpp"

namespace lcmlab {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ZeroTerm: return "ZeroTerm";
    case ErrorKind::NegativeInput: return "NegativeInput";
    case ErrorKind::BadPrime: return "BadPrime";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::ZeroDivisor: return "ZeroDivisor";
    case ErrorKind::NonPositiveN: return "NonPositiveN";
    case ErrorKind::NegativeIndex: return "NegativeIndex";
    case ErrorKind::BadRange: return "BadRange";
    case ErrorKind::RepeatedTerm: return "RepeatedTerm";
    case ErrorKind::ZeroSum: return "ZeroSum";
    case ErrorKind::ZeroEntry: return "ZeroEntry";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::BadR: return "BadR";
    case ErrorKind::EmptyRange: return "EmptyRange";
    case ErrorKind::BadInput: return "BadInput";
    case ErrorKind::KTooLarge: return "KTooLarge";
  }
  return "Unknown";
}

}  // namespace lcmlab
