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

#include "diarpost/codec.hpp"

#include <cctype>
#include <limits>

namespace diarpost {

std::string serialize(std::span<const std::string> words,
                      std::span<const SpeakerId> speakers) {
  std::string out;
  SpeakerId current = kBlankSpeaker;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (!out.empty()) out += ' ';
    if (i == 0 || speakers[i] != current) {
      current = speakers[i];
      out += kSpeakerTokenPrefix;
      out += std::to_string(current);
      out += "> ";
    }
    out += words[i];
  }
  return out;
}

std::string serialize(const DiarizedUtterance& u) {
  return serialize(u.words, u.speakers);
}

std::optional<SpeakerId> parse_speaker_token(std::string_view token) {
  if (token.size() < kSpeakerTokenPrefix.size() + 2) return std::nullopt;
  if (token.substr(0, kSpeakerTokenPrefix.size()) != kSpeakerTokenPrefix) return std::nullopt;
  if (token.back() != '>') return std::nullopt;
  std::string_view digits =
      token.substr(kSpeakerTokenPrefix.size(),
                   token.size() - kSpeakerTokenPrefix.size() - 1);
  if (digits.empty()) return std::nullopt;
  long long value = 0;
  for (char c : digits) {
    if (c < '0' || c > '9') return std::nullopt;
    value = value * 10 + (c - '0');
    if (value > std::numeric_limits<SpeakerId>::max()) return std::nullopt;
  }
  if (value < 1) return std::nullopt;  // labels are 1-based
  return static_cast<SpeakerId>(value);
}

DiarizedUtterance parse(std::string_view text, SpeakerId fallback_speaker, bool sanitize) {
  if (fallback_speaker < 1) {
    throw DiarError(ErrorCode::kNonPositiveSpeaker,
                    "parse: fallback speaker must be >= 1, got " +
                        std::to_string(fallback_speaker));
  }
  DiarizedUtterance out;
  SpeakerId current = fallback_speaker;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    std::string_view token = text.substr(pos, end - pos);
    pos = end;

    if (auto speaker = parse_speaker_token(token)) {
      current = *speaker;
      continue;
    }
    std::string word(token);
    if (word.find(kSpeakerTokenPrefix) != std::string::npos) {
      if (!sanitize) {
        throw DiarError(ErrorCode::kMalformedSpeakerToken,
                        "parse: token \"" + word + "\" is not a valid speaker token");
      }
      word = sanitize_word(std::move(word));
    }
    out.words.push_back(std::move(word));
    out.speakers.push_back(current);
  }
  return out;
}

}  // namespace diarpost
