#pragma once

#include <stdexcept>
#include <string>

namespace gmr {

enum class ErrorCode {
  // documents and task labels
  MalformedLabel,
  NonCanonicalTask,
  SchemaViolation,
  MalformedDocument,
  NotGraspFirst,
  NotReleaseLast,
  ChainBreak,
  // posture encoding
  DegenerateSkeleton,
  NotUnit,
  AllFramesInvalid,
  CoverageGap,
  // segmentation
  NoActionVerb,
  NoTargetObject,
  NoGraspDetected,
  EmptySegment,
  // verb knowledge base and task detection
  KbChainError,
  DuplicateVerb,
  UnknownVerb,
  AmbiguityUnresolved,
  ChainConflict,
  InitialStateMismatch,
  // geometric fitting
  DegenerateTrajectory,
  DegeneratePlane,
  DegenerateLine,
  DegenerateCircle,
  InsufficientSamples,
  NoContactSignature,
  KindMismatch,
  LocationUnknown,
  // playback
  InvalidScenarioParams,
  StateMismatch,
  // configuration
  InvalidConfig,
};

const char* to_string(ErrorCode code);

/// Exception carrying a machine-readable code alongside the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace gmr
