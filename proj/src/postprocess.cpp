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

#include "diarpost/postprocess.hpp"

#include <algorithm>

#include "diarpost/codec.hpp"
#include "diarpost/speaker_transfer.hpp"

namespace diarpost {

std::string truncate_completion(std::string_view text, std::string_view completion_suffix) {
  if (completion_suffix.empty()) return std::string(text);
  std::size_t pos = text.find(completion_suffix);
  if (pos == std::string_view::npos) return std::string(text);
  return std::string(text.substr(0, pos));
}

DiarizedUtterance parse_segment(std::string_view text,
                                std::optional<SpeakerId> previous_last_speaker,
                                bool sanitize) {
  return parse(text, previous_last_speaker.value_or(1), sanitize);
}

DiarizedUtterance finalize(const DiarizedUtterance& original,
                           std::vector<CompletionRecord> completions,
                           std::string_view completion_suffix, bool sanitize) {
  if (completions.empty()) return original;

  std::sort(completions.begin(), completions.end(),
            [](const CompletionRecord& a, const CompletionRecord& b) {
              return a.segment_index < b.segment_index;
            });
  for (std::size_t i = 0; i < completions.size(); ++i) {
    if (completions[i].segment_index != static_cast<int>(i)) {
      throw DiarError(ErrorCode::kMissingSegment,
                      "utterance " + original.utterance_id + ": expected segment " +
                          std::to_string(i) + ", got " +
                          std::to_string(completions[i].segment_index));
    }
  }

  std::vector<std::string> llm_words;
  std::vector<SpeakerId> llm_speakers;
  std::optional<SpeakerId> last_speaker;
  for (const CompletionRecord& record : completions) {
    std::string body = truncate_completion(record.completion, completion_suffix);
    DiarizedUtterance parsed = parse_segment(body, last_speaker, sanitize);
    if (!parsed.speakers.empty()) last_speaker = parsed.speakers.back();
    llm_words.insert(llm_words.end(), std::make_move_iterator(parsed.words.begin()),
                     std::make_move_iterator(parsed.words.end()));
    llm_speakers.insert(llm_speakers.end(), parsed.speakers.begin(), parsed.speakers.end());
  }

  DiarizedUtterance out = original;
  out.speakers =
      transfer_speakers(llm_words, llm_speakers, original.words, original.speakers);
  return out;
}

}  // namespace diarpost
