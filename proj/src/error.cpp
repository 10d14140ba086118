#include "ghsimplex/error.hpp"

namespace ghs {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::AsymmetricMatrix: return "AsymmetricMatrix";
        case ErrorCode::NegativeDistance: return "NegativeDistance";
        case ErrorCode::ZeroOffDiagonal: return "ZeroOffDiagonal";
        case ErrorCode::TriangleViolation: return "TriangleViolation";
        case ErrorCode::NonZeroDiagonal: return "NonZeroDiagonal";
        case ErrorCode::NonSquareMatrix: return "NonSquareMatrix";
        case ErrorCode::NonFiniteEntry: return "NonFiniteEntry";
        case ErrorCode::NonPositiveScale: return "NonPositiveScale";
        case ErrorCode::ZeroPoints: return "ZeroPoints";
        case ErrorCode::EmptySet: return "EmptySet";
        case ErrorCode::BadCardinality: return "BadCardinality";
        case ErrorCode::Overflow: return "Overflow";
        case ErrorCode::EmptyRelation: return "EmptyRelation";
        case ErrorCode::NotACorrespondence: return "NotACorrespondence";
        case ErrorCode::SizeThresholdExceeded: return "SizeThresholdExceeded";
        case ErrorCode::NonPositiveLambda: return "NonPositiveLambda";
        case ErrorCode::EnumerationTooLarge: return "EnumerationTooLarge";
        case ErrorCode::InvalidCharacteristics: return "InvalidCharacteristics";
        case ErrorCode::BadGrid: return "BadGrid";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::IoError: return "IoError";
        case ErrorCode::BadParams: return "BadParams";
    }
    return "Unknown";
}

bool is_metric_violation(ErrorCode code) {
    switch (code) {
        case ErrorCode::AsymmetricMatrix:
        case ErrorCode::NegativeDistance:
        case ErrorCode::ZeroOffDiagonal:
        case ErrorCode::TriangleViolation:
        case ErrorCode::NonZeroDiagonal:
        case ErrorCode::NonSquareMatrix:
        case ErrorCode::NonFiniteEntry:
        case ErrorCode::ZeroPoints:
            return true;
        default:
            return false;
    }
}

}  // namespace ghs
