#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace eigenstrata {

enum class ErrorCode {
    OutOfRange,
    InvalidArgument,
    DuplicatePoints,
    DegenerateConfiguration,
    DegenerateForm,
    NoConvergence,
    NotSymmetric,
    NotSquare,
    ParseError,
    DimensionMismatch,
    SizeLimit,
    IncompatibleTargets,
    UnknownObject,
    IoError,
};

/// Stable machine-readable name, used in JSON error records.
std::string_view code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace eigenstrata
