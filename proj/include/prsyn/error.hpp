#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace prsyn {

enum class ErrorKind {
  ZeroDenominator,
  PoleAtPoint,
  NotPR,
  NotMinimum,
  NotBiquadratic,
  IrrationalValue,
  DegreeTooSmall,
  SyntaxError,
  NotBiconnected,
  NonpositiveValue,
  MissingPort,
  NotPlanarDualizable,
  InconsistentDrive,
  HypothesesNotMet,
  WrongBranch,
  NonConstantReduced,
  ConditionViolated,
  ConstraintViolated,
  NoMatch,
  InvalidArgument,
};

inline std::string_view to_string(ErrorKind k) {
  switch (k) {
  case ErrorKind::ZeroDenominator: return "ZeroDenominator";
  case ErrorKind::PoleAtPoint: return "PoleAtPoint";
  case ErrorKind::NotPR: return "NotPR";
  case ErrorKind::NotMinimum: return "NotMinimum";
  case ErrorKind::NotBiquadratic: return "NotBiquadratic";
  case ErrorKind::IrrationalValue: return "IrrationalValue";
  case ErrorKind::DegreeTooSmall: return "DegreeTooSmall";
  case ErrorKind::SyntaxError: return "SyntaxError";
  case ErrorKind::NotBiconnected: return "NotBiconnected";
  case ErrorKind::NonpositiveValue: return "NonpositiveValue";
  case ErrorKind::MissingPort: return "MissingPort";
  case ErrorKind::NotPlanarDualizable: return "NotPlanarDualizable";
  case ErrorKind::InconsistentDrive: return "InconsistentDrive";
  case ErrorKind::HypothesesNotMet: return "HypothesesNotMet";
  case ErrorKind::WrongBranch: return "WrongBranch";
  case ErrorKind::NonConstantReduced: return "NonConstantReduced";
  case ErrorKind::ConditionViolated: return "ConditionViolated";
  case ErrorKind::ConstraintViolated: return "ConstraintViolated";
  case ErrorKind::NoMatch: return "NoMatch";
  case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

// Every recoverable failure in the library is reported through this type.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string &what) {
  throw Error(kind, what);
}

} // namespace prsyn
