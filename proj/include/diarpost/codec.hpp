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

#ifndef DIARPOST_CODEC_HPP_
#define DIARPOST_CODEC_HPP_

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "diarpost/types.hpp"

namespace diarpost {

// Compact text form of a diarized transcript: "<spk:k>" appears before the
// first word and wherever the speaker changes, all tokens single-space
// separated. This string IS the wire format embedded in prompts and
// completions; words pass through verbatim as opaque UTF-8.
std::string serialize(std::span<const std::string> words,
                      std::span<const SpeakerId> speakers);
std::string serialize(const DiarizedUtterance& u);

// Exact speaker-token match ("<spk:12>"); leading zeros parse as their
// integer value. Returns nullopt for anything else, including "<spk:0>".
std::optional<SpeakerId> parse_speaker_token(std::string_view token);

// Inverse of serialize, tolerant of LLM sloppiness: arbitrary whitespace
// runs, duplicate speaker tokens, and text starting mid-turn (labeled with
// `fallback_speaker`). A token containing "<spk:" that is not a full speaker
// token is MalformedSpeakerToken, or a plain word after sanitize. The result
// always passes validate_utterance.
DiarizedUtterance parse(std::string_view text, SpeakerId fallback_speaker = 1,
                        bool sanitize = false);

}  // namespace diarpost

#endif  // DIARPOST_CODEC_HPP_
