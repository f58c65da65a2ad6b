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

#ifndef DIARPOST_TYPES_HPP_
#define DIARPOST_TYPES_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "diarpost/error.hpp"

namespace diarpost {

// Speaker labels are 1-based positive integers. They come from a diarizer's
// cluster IDs and are not required to be contiguous. 0 is reserved for the
// "blank" slot produced by alignment insertions.
using SpeakerId = int;
inline constexpr SpeakerId kBlankSpeaker = 0;

// Every substring starting with this prefix is reserved for speaker tokens
// ("<spk:3>") in the wire format and therefore forbidden inside words.
inline constexpr std::string_view kSpeakerTokenPrefix = "<spk:";

// A transcript with one speaker label per word. The two sequences always
// have equal length; words are whitespace-free, non-empty, and never contain
// the reserved speaker-token prefix.
struct DiarizedUtterance {
  std::string utterance_id;
  std::vector<std::string> words;
  std::vector<SpeakerId> speakers;

  bool operator==(const DiarizedUtterance&) const = default;
};

// One recognized word with its timing, in seconds.
struct TimedWord {
  std::string word;
  double start = 0.0;
  double end = 0.0;
};

// One diarizer segment: a speaker active over [start, end] seconds.
struct SpeakerSegment {
  SpeakerId speaker = 1;
  double start = 0.0;
  double end = 0.0;
};

struct ValidationIssue {
  ErrorCode code;
  std::size_t index = 0;
  std::string message;
};

// Returns the first violated invariant, or nullopt if `u` is valid.
// Checks, in order: sequence lengths, then per position (left to right):
// empty word, whitespace in word, reserved "<spk:" substring, speaker < 1.
std::optional<ValidationIssue> validate_utterance(const DiarizedUtterance& u);

// Throws DiarError if `u` is invalid.
void check_utterance(const DiarizedUtterance& u);

// Opt-in repair: replaces every "<spk:" occurrence with "(spk:". Validation
// stays strict by default so data bugs surface instead of being rewritten.
std::string sanitize_word(std::string word);
DiarizedUtterance sanitize_utterance(DiarizedUtterance u);

}  // namespace diarpost

#endif  // DIARPOST_TYPES_HPP_
