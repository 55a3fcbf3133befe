#pragma once

#include <stdexcept>
#include <string>

namespace mstruct {

/// Every failure the library can report, one code per distinct condition.
/// The CLI maps these onto its exit-code classes (input / config / solver).
enum class ErrorCode {
  // volume I/O and addressing
  BadMagic,
  HeaderParse,
  PayloadSizeMismatch,
  LabelOutOfRange,
  IoFailure,
  IndexOutOfRange,
  // fixture generation
  BadSpec,
  NotBinary,
  // descriptors
  BadPhase,
  LagTooLarge,
  EmptyPhase,
  WindowTooLarge,
  MixedShapes,
  // texture
  NoValidPairs,
  NotNormalized,
  NonFinite,
  // image quality
  DimMismatch,
  ImageSmallerThanWindow,
  KindMismatch,
  // physics
  NotPhase,
  SolverDiverged,
  // losses
  SizeMismatch,
  NotDistribution,
  DomainViolation,
  EmptyBatch,
  ShapeMismatch,
  NegativeClip,
  // report / CLI configuration
  ConfigInvalid,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace mstruct
