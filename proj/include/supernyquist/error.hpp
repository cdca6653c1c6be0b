#ifndef SUPERNYQUIST_ERROR_HPP
#define SUPERNYQUIST_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace supernyquist {

enum class ErrorCode {
    InvalidParameter,
    NotCoprime,
    TooFewLevels,
    InvalidPeriods,
    Unsupported,
    UnsupportedScheme,
    AsymmetricLagTable,
    NoMinimumFound,
    FrequencyOutOfRange,
    LengthMismatch,
    NonPositiveInput,
    IoFailure,
    InvalidConfig,
};

inline constexpr std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::TooFewLevels: return "TooFewLevels";
    case ErrorCode::InvalidPeriods: return "InvalidPeriods";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::UnsupportedScheme: return "UnsupportedScheme";
    case ErrorCode::AsymmetricLagTable: return "AsymmetricLagTable";
    case ErrorCode::NoMinimumFound: return "NoMinimumFound";
    case ErrorCode::FrequencyOutOfRange: return "FrequencyOutOfRange";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NonPositiveInput: return "NonPositiveInput";
    case ErrorCode::IoFailure: return "IoFailure";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    }
    return "Unknown";
}

/// Exception carrying a machine-readable code; what() holds the human-readable detail.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace supernyquist

#endif
