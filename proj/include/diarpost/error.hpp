// Copyright 2026 The diarpost Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef DIARPOST_ERROR_HPP_
#define DIARPOST_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace diarpost {

enum class ErrorCode {
  // Utterance validation.
  kLengthMismatch,
  kEmptyWord,
  kWhitespaceInWord,
  kReservedTokenInWord,
  kNonPositiveSpeaker,
  // Orchestration.
  kNoSegments,
  // Codec.
  kMalformedSpeakerToken,
  // Prompt building.
  kInvalidPromptConfig,
  kUnsplittableSegment,
  // Completion handling.
  kMissingSegment,
  kOrphanCompletion,
  // Metrics.
  kTooManySpeakers,
  // Data generation.
  kUnknownTopic,
  kUnknownScene,
  // Completion backends.
  kTimeout,
  kHttpStatus,
  kMissingReplayKey,
  kMalformedResponse,
  kBackendFailure,
  // File schemas.
  kSchema,
  kUsage,
};

const char* error_code_name(ErrorCode code);

// Category used by the CLI to pick an exit code.
enum class ErrorCategory { kUsage = 1, kSchema = 2, kBackend = 3, kInternal = 4 };
ErrorCategory error_category(ErrorCode code);

class DiarError : public std::runtime_error {
 public:
  DiarError(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace diarpost

#endif  // DIARPOST_ERROR_HPP_
