#include "ric/error.hpp"

namespace ric {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::Range: return "RANGE";
        case ErrorCode::NonDivisor: return "NON_DIVISOR";
        case ErrorCode::LengthMismatch: return "LENGTH_MISMATCH";
        case ErrorCode::NotPowerOfTwo: return "NOT_POWER_OF_TWO";
        case ErrorCode::NonFinite: return "NON_FINITE";
        case ErrorCode::Parse: return "PARSE";
        case ErrorCode::Empty: return "EMPTY";
        case ErrorCode::Io: return "IO";
        case ErrorCode::Config: return "CONFIG";
        case ErrorCode::Infeasible: return "INFEASIBLE";
    }
    return "UNKNOWN";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace ric
