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

#include "diarpost/types.hpp"

#include <cctype>

namespace diarpost {

namespace {

bool contains_whitespace(std::string_view word) {
  for (unsigned char c : word) {
    if (std::isspace(c)) return true;
  }
  return false;
}

}  // namespace

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kEmptyWord: return "EmptyWord";
    case ErrorCode::kWhitespaceInWord: return "WhitespaceInWord";
    case ErrorCode::kReservedTokenInWord: return "ReservedTokenInWord";
    case ErrorCode::kNonPositiveSpeaker: return "NonPositiveSpeaker";
    case ErrorCode::kNoSegments: return "NoSegments";
    case ErrorCode::kMalformedSpeakerToken: return "MalformedSpeakerToken";
    case ErrorCode::kInvalidPromptConfig: return "InvalidPromptConfig";
    case ErrorCode::kUnsplittableSegment: return "UnsplittableSegment";
    case ErrorCode::kMissingSegment: return "MissingSegment";
    case ErrorCode::kOrphanCompletion: return "OrphanCompletion";
    case ErrorCode::kTooManySpeakers: return "TooManySpeakers";
    case ErrorCode::kUnknownTopic: return "UnknownTopic";
    case ErrorCode::kUnknownScene: return "UnknownScene";
    case ErrorCode::kTimeout: return "Timeout";
    case ErrorCode::kHttpStatus: return "HttpStatus";
    case ErrorCode::kMissingReplayKey: return "MissingReplayKey";
    case ErrorCode::kMalformedResponse: return "MalformedResponse";
    case ErrorCode::kBackendFailure: return "BackendFailure";
    case ErrorCode::kSchema: return "SchemaError";
    case ErrorCode::kUsage: return "UsageError";
  }
  return "UnknownError";
}

ErrorCategory error_category(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUsage:
    case ErrorCode::kInvalidPromptConfig:
    case ErrorCode::kUnknownTopic:
    case ErrorCode::kUnknownScene:
      return ErrorCategory::kUsage;
    case ErrorCode::kLengthMismatch:
    case ErrorCode::kEmptyWord:
    case ErrorCode::kWhitespaceInWord:
    case ErrorCode::kReservedTokenInWord:
    case ErrorCode::kNonPositiveSpeaker:
    case ErrorCode::kMalformedSpeakerToken:
    case ErrorCode::kUnsplittableSegment:
    case ErrorCode::kMissingSegment:
    case ErrorCode::kOrphanCompletion:
    case ErrorCode::kSchema:
      return ErrorCategory::kSchema;
    case ErrorCode::kTimeout:
    case ErrorCode::kHttpStatus:
    case ErrorCode::kMissingReplayKey:
    case ErrorCode::kMalformedResponse:
    case ErrorCode::kBackendFailure:
      return ErrorCategory::kBackend;
    default:
      return ErrorCategory::kInternal;
  }
}

std::optional<ValidationIssue> validate_utterance(const DiarizedUtterance& u) {
  if (u.words.size() != u.speakers.size()) {
    std::size_t index = std::min(u.words.size(), u.speakers.size());
    return ValidationIssue{
        ErrorCode::kLengthMismatch, index,
        "words has " + std::to_string(u.words.size()) + " entries but speakers has " +
            std::to_string(u.speakers.size())};
  }
  for (std::size_t i = 0; i < u.words.size(); ++i) {
    const std::string& word = u.words[i];
    if (word.empty()) {
      return ValidationIssue{ErrorCode::kEmptyWord, i,
                             "word at index " + std::to_string(i) + " is empty"};
    }
    if (contains_whitespace(word)) {
      return ValidationIssue{ErrorCode::kWhitespaceInWord, i,
                             "word at index " + std::to_string(i) + " contains whitespace"};
    }
    if (word.find(kSpeakerTokenPrefix) != std::string::npos) {
      return ValidationIssue{ErrorCode::kReservedTokenInWord, i,
                             "word at index " + std::to_string(i) +
                                 " contains the reserved token prefix \"<spk:\""};
    }
    if (u.speakers[i] < 1) {
      return ValidationIssue{ErrorCode::kNonPositiveSpeaker, i,
                             "speaker at index " + std::to_string(i) + " is " +
                                 std::to_string(u.speakers[i]) + "; labels are 1-based"};
    }
  }
  return std::nullopt;
}

void check_utterance(const DiarizedUtterance& u) {
  if (auto issue = validate_utterance(u)) {
    std::string prefix = u.utterance_id.empty() ? "" : "utterance " + u.utterance_id + ": ";
    throw DiarError(issue->code, prefix + issue->message);
  }
}

std::string sanitize_word(std::string word) {
  std::size_t pos = 0;
  while ((pos = word.find(kSpeakerTokenPrefix, pos)) != std::string::npos) {
    word[pos] = '(';
    pos += kSpeakerTokenPrefix.size();
  }
  return word;
}

DiarizedUtterance sanitize_utterance(DiarizedUtterance u) {
  for (std::string& word : u.words) {
    word = sanitize_word(std::move(word));
  }
  return u;
}

}  // namespace diarpost
