#pragma once

#include <stdexcept>
#include <string>

namespace simplex_spectra {

enum class ErrorCode {
    InvalidInput,
    LoopEdge,
    MissingBoundaryEdge,
    DuplicateFace,
    Disconnected,
    NonpositiveWeight,
    UnknownEdge,
    UnknownVertex,
    DimensionMismatch,
    EigensolveFailure,
    NotCompleteGraph,
    TooLarge,
    NotHomogeneous,
    EmptyFaceNeighbor,
    NotNormalized,
    NotOneEdgeExtension,
    InvalidPartition,
};

const char* error_code_name(ErrorCode code);

/// Library-wide exception carrying a machine-checkable code.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code)
    {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

} // namespace simplex_spectra
