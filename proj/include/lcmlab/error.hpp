#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lcmlab {

enum class ErrorKind {
  ZeroTerm,
  NegativeInput,
  BadPrime,
  ZeroInput,
  ZeroDivisor,
  NonPositiveN,
  NegativeIndex,
  BadRange,
  RepeatedTerm,
  ZeroSum,
  ZeroEntry,
  LengthMismatch,
  HypothesisViolated,
  BadR,
  EmptyRange,
  BadInput,
  KTooLarge,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Raised by every library operation whose precondition fails.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace lcmlab
