#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace pivotminor {

enum class ErrorCode {
  MalformedGraph6,
  MalformedInput,
  Oversize,
  InvalidSet,
  InvalidVertex,
  NotAnEdge,
  MissingVertex,
  BudgetExhausted,
  InvalidPlan,
  InvalidMass,
  PreconditionViolated,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedGraph6: return "MalformedGraph6";
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::Oversize: return "Oversize";
    case ErrorCode::InvalidSet: return "InvalidSet";
    case ErrorCode::InvalidVertex: return "InvalidVertex";
    case ErrorCode::NotAnEdge: return "NotAnEdge";
    case ErrorCode::MissingVertex: return "MissingVertex";
    case ErrorCode::BudgetExhausted: return "BudgetExhausted";
    case ErrorCode::InvalidPlan: return "InvalidPlan";
    case ErrorCode::InvalidMass: return "InvalidMass";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
  }
  return "Unknown";
}

// Every library failure is an Error carrying a code; witness failures also
// carry the index of the offending step.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> step = std::nullopt)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        step_(step) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> step() const noexcept { return step_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> step_;
};

}  // namespace pivotminor
