#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tandem {

/// Stable error categories. The string form returned by `error_code_name`
/// is part of the CLI's machine-readable error object.
enum class ErrorCode {
  kParameter,
  kOutOfScope,
  kIndex,
  kPrecondition,
  kBudget,
  kUndefinedThroughput,
  kConfigParse,
  kConfig,
  kIo,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParameterError : public Error {
 public:
  explicit ParameterError(const std::string& message)
      : Error(ErrorCode::kParameter, message) {}
};

class OutOfScopeError : public Error {
 public:
  explicit OutOfScopeError(const std::string& message)
      : Error(ErrorCode::kOutOfScope, message) {}
};

class IndexError : public Error {
 public:
  explicit IndexError(const std::string& message)
      : Error(ErrorCode::kIndex, message) {}
};

class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& message)
      : Error(ErrorCode::kPrecondition, message) {}
};

class BudgetError : public Error {
 public:
  explicit BudgetError(const std::string& message)
      : Error(ErrorCode::kBudget, message) {}
};

class UndefinedThroughputError : public Error {
 public:
  explicit UndefinedThroughputError(const std::string& message)
      : Error(ErrorCode::kUndefinedThroughput, message) {}
};

}  // namespace tandem
