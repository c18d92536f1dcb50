#pragma once

#include <stdexcept>
#include <string>

namespace recap {

// Stable machine-readable error codes; the CLI maps these to its
// error JSON and exit codes.
enum class ErrorCode {
    ZeroRecapture,
    InvalidCounts,
    InvalidSequence,
    EmptyTitle,
    ParseError,
    UnsupportedFormat,
    EmptyList,
    WindowTooLarge,
    LengthMismatch,
    DuplicateId,
    DegenerateInput,
    InvalidParams,
    NotConverged,
    KTooLarge,
    IoError,
};

inline const char* to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::ZeroRecapture: return "ZeroRecapture";
    case ErrorCode::InvalidCounts: return "InvalidCounts";
    case ErrorCode::InvalidSequence: return "InvalidSequence";
    case ErrorCode::EmptyTitle: return "EmptyTitle";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnsupportedFormat: return "UnsupportedFormat";
    case ErrorCode::EmptyList: return "EmptyList";
    case ErrorCode::WindowTooLarge: return "WindowTooLarge";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::NotConverged: return "NotConverged";
    case ErrorCode::KTooLarge: return "KTooLarge";
    case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace recap
