#include "tandem/error.hpp"

namespace tandem {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kParameter:
      return "parameter_error";
    case ErrorCode::kOutOfScope:
      return "out_of_scope";
    case ErrorCode::kIndex:
      return "index_error";
    case ErrorCode::kPrecondition:
      return "precondition_error";
    case ErrorCode::kBudget:
      return "budget_exceeded";
    case ErrorCode::kUndefinedThroughput:
      return "undefined_throughput";
    case ErrorCode::kConfigParse:
      return "config_parse_error";
    case ErrorCode::kConfig:
      return "config_error";
    case ErrorCode::kIo:
      return "io_error";
  }
  return "unknown_error";
}

}  // namespace tandem
