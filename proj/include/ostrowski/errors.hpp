#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace ostrowski {

enum class ErrorCode {
    ParseError,
    MixedFields,
    DivisionByZero,
    AlphaOutOfRange,
    RationalBase,
    SeedOutOfRange,
    DigitsExhausted,
    PrecisionExhausted,
    InadmissibleDigits,
    IdentityViolation,
    CapExceeded,
};

const char* error_code_name(ErrorCode code);

// Carries enough context for the CLI to emit a machine-readable error object:
// stable code, originating module/operation, and the offending index if any.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string module_name, std::string operation,
          std::string message, std::optional<long long> index = std::nullopt)
        : std::runtime_error(message),
          code_(code),
          module_(std::move(module_name)),
          operation_(std::move(operation)),
          index_(index) {}

    ErrorCode code() const { return code_; }
    const std::string& module_name() const { return module_; }
    const std::string& operation() const { return operation_; }
    std::optional<long long> index() const { return index_; }

private:
    ErrorCode code_;
    std::string module_;
    std::string operation_;
    std::optional<long long> index_;
};

}  // namespace ostrowski
