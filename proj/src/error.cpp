#include "mstruct/error.hpp"

namespace mstruct {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::BadMagic: return "BadMagic";
    case ErrorCode::HeaderParse: return "HeaderParse";
    case ErrorCode::PayloadSizeMismatch: return "PayloadSizeMismatch";
    case ErrorCode::LabelOutOfRange: return "LabelOutOfRange";
    case ErrorCode::IoFailure: return "IoFailure";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::BadSpec: return "BadSpec";
    case ErrorCode::NotBinary: return "NotBinary";
    case ErrorCode::BadPhase: return "BadPhase";
    case ErrorCode::LagTooLarge: return "LagTooLarge";
    case ErrorCode::EmptyPhase: return "EmptyPhase";
    case ErrorCode::WindowTooLarge: return "WindowTooLarge";
    case ErrorCode::MixedShapes: return "MixedShapes";
    case ErrorCode::NoValidPairs: return "NoValidPairs";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::DimMismatch: return "DimMismatch";
    case ErrorCode::ImageSmallerThanWindow: return "ImageSmallerThanWindow";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::NotPhase: return "NotPhase";
    case ErrorCode::SolverDiverged: return "SolverDiverged";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::NotDistribution: return "NotDistribution";
    case ErrorCode::DomainViolation: return "DomainViolation";
    case ErrorCode::EmptyBatch: return "EmptyBatch";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NegativeClip: return "NegativeClip";
    case ErrorCode::ConfigInvalid: return "ConfigInvalid";
  }
  return "UnknownError";
}

}  // namespace mstruct
