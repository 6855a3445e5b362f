#include "eigenstrata/error.hpp"

namespace eigenstrata {

std::string_view code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::DuplicatePoints: return "DuplicatePoints";
        case ErrorCode::DegenerateConfiguration: return "DegenerateConfiguration";
        case ErrorCode::DegenerateForm: return "DegenerateForm";
        case ErrorCode::NoConvergence: return "NoConvergence";
        case ErrorCode::NotSymmetric: return "NotSymmetric";
        case ErrorCode::NotSquare: return "NotSquare";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::SizeLimit: return "SizeLimit";
        case ErrorCode::IncompatibleTargets: return "IncompatibleTargets";
        case ErrorCode::UnknownObject: return "UnknownObject";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

}  // namespace eigenstrata
