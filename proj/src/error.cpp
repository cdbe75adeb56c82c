#include "simplex_spectra/error.hpp"

namespace simplex_spectra {

const char* error_code_name(ErrorCode code)
{
    switch (code) {
        case ErrorCode::InvalidInput: return "InvalidInput";
        case ErrorCode::LoopEdge: return "LoopEdge";
        case ErrorCode::MissingBoundaryEdge: return "MissingBoundaryEdge";
        case ErrorCode::DuplicateFace: return "DuplicateFace";
        case ErrorCode::Disconnected: return "Disconnected";
        case ErrorCode::NonpositiveWeight: return "NonpositiveWeight";
        case ErrorCode::UnknownEdge: return "UnknownEdge";
        case ErrorCode::UnknownVertex: return "UnknownVertex";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::EigensolveFailure: return "EigensolveFailure";
        case ErrorCode::NotCompleteGraph: return "NotCompleteGraph";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::NotHomogeneous: return "NotHomogeneous";
        case ErrorCode::EmptyFaceNeighbor: return "EmptyFaceNeighbor";
        case ErrorCode::NotNormalized: return "NotNormalized";
        case ErrorCode::NotOneEdgeExtension: return "NotOneEdgeExtension";
        case ErrorCode::InvalidPartition: return "InvalidPartition";
    }
    return "UnknownError";
}

} // namespace simplex_spectra
