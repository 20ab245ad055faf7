#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rgresum {

enum class ErrorKind {
  NonzeroInnerConstant,
  ZeroLinearCoefficient,
  InsufficientOrder,
  DomainError,
  NegativeCoupling,
  ConvergenceFailure,
  NoRootInBracket,
  ConfigError,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonzeroInnerConstant: return "NonzeroInnerConstant";
    case ErrorKind::ZeroLinearCoefficient: return "ZeroLinearCoefficient";
    case ErrorKind::InsufficientOrder: return "InsufficientOrder";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::NegativeCoupling: return "NegativeCoupling";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::NoRootInBracket: return "NoRootInBracket";
    case ErrorKind::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

// Single exception type for the library; callers dispatch on kind().
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  // Convergence problems are reported separately from bad input.
  bool is_convergence() const noexcept {
    return kind_ == ErrorKind::ConvergenceFailure || kind_ == ErrorKind::NoRootInBracket;
  }

private:
  ErrorKind kind_;
};

}  // namespace rgresum
