#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mvkt {

enum class ErrorCode {
    // schema failures: the input document is structurally unusable (exit 2)
    SchemaError,
    // validation failures: well-formed input that violates a math invariant (exit 3)
    ShapeMismatch,
    NotWellDefined,
    NotInvolutive,
    NotBijective,
    NotACocycle,
    CoverConditionViolated,
    InvalidComplex,
    InvalidChainComplex,
    DegreeOutOfRange,
    // unsupported regimes: valid input outside the implemented theory (exit 4)
    TwistedRunUnsupported,
    CoefficientDegreeMismatch,
    UnsupportedDimension,
};

std::string_view error_code_name(ErrorCode code);

/// Process exit status for a failure of the given class: 2 schema,
/// 3 validation, 4 unsupported regime.
int exit_status(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

inline std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::SchemaError: return "SchemaError";
        case ErrorCode::ShapeMismatch: return "ShapeMismatch";
        case ErrorCode::NotWellDefined: return "NotWellDefined";
        case ErrorCode::NotInvolutive: return "NotInvolutive";
        case ErrorCode::NotBijective: return "NotBijective";
        case ErrorCode::NotACocycle: return "NotACocycle";
        case ErrorCode::CoverConditionViolated: return "CoverConditionViolated";
        case ErrorCode::InvalidComplex: return "InvalidComplex";
        case ErrorCode::InvalidChainComplex: return "InvalidChainComplex";
        case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
        case ErrorCode::TwistedRunUnsupported: return "TwistedRunUnsupported";
        case ErrorCode::CoefficientDegreeMismatch: return "CoefficientDegreeMismatch";
        case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
    }
    return "UnknownError";
}

inline int exit_status(ErrorCode code) {
    switch (code) {
        case ErrorCode::SchemaError:
            return 2;
        case ErrorCode::TwistedRunUnsupported:
        case ErrorCode::CoefficientDegreeMismatch:
        case ErrorCode::UnsupportedDimension:
            return 4;
        default:
            return 3;
    }
}

}  // namespace mvkt
