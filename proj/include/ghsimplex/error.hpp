#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ghs {

enum class ErrorCode {
    // metric-core
    AsymmetricMatrix,
    NegativeDistance,
    ZeroOffDiagonal,
    TriangleViolation,
    NonZeroDiagonal,
    NonSquareMatrix,
    NonFiniteEntry,
    NonPositiveScale,
    ZeroPoints,
    EmptySet,
    // partitions
    BadCardinality,
    Overflow,
    // correspondences
    EmptyRelation,
    NotACorrespondence,
    SizeThresholdExceeded,
    // simplex-distance
    NonPositiveLambda,
    EnumerationTooLarge,
    InvalidCharacteristics,
    BadGrid,
    // io / cli
    ParseError,
    IoError,
    BadParams,
};

std::string_view to_string(ErrorCode code);

/// The single exception type thrown by the library; `code()` carries the
/// failure class so callers (the CLI in particular) can map it to an exit code.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// True for the errors that mean "this matrix is not a metric".
bool is_metric_violation(ErrorCode code);

}  // namespace ghs
