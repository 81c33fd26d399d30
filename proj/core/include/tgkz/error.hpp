#pragma once

#include <stdexcept>
#include <string>

namespace tgkz {

enum class ErrorCode {
  Malformed,
  DimensionMismatch,
  UnsupportedCharacterValue,
  EmptyCone,
  NotPointed,
  NotFullDimensional,
  LatticeMismatch,
  NotSaturated,
  NotGraded,
  SliceTooSmall,
  BudgetExceeded,
  Unsupported,
  HypothesisFailure,
  InternalCheckFailed,
};

/// Upper-case code name, e.g. "EMPTY_CONE".
const char* code_name(ErrorCode code);

/// Error carrying a machine-readable code and the module that raised it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string module, const std::string& message)
      : std::runtime_error(message), code_(code), module_(std::move(module)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& module() const noexcept { return module_; }

  /// "module.CODE", as printed in CLI diagnostics.
  std::string qualified_code() const { return module_ + "." + code_name(code_); }

 private:
  ErrorCode code_;
  std::string module_;
};

}  // namespace tgkz
