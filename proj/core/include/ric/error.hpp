#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ric {

enum class ErrorCode {
    Range,
    NonDivisor,
    LengthMismatch,
    NotPowerOfTwo,
    NonFinite,
    Parse,
    Empty,
    Io,
    Config,
    Infeasible,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// front ends (the CLI in particular) can map it to a stable exit status.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message);

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace ric
