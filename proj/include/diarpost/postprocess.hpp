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

#ifndef DIARPOST_POSTPROCESS_HPP_
#define DIARPOST_POSTPROCESS_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "diarpost/types.hpp"

namespace diarpost {

// Raw LLM output for one prompt segment.
struct CompletionRecord {
  std::string utterance_id;
  int segment_index = 0;
  std::string completion;
};

// Drops the completion suffix and everything after its first occurrence.
// Text without the suffix passes through unchanged.
std::string truncate_completion(std::string_view text, std::string_view completion_suffix);

// Parses one already-truncated segment completion. Text that does not open
// with a speaker token continues the previous segment's last speaker, or
// speaker 1 for the first segment.
DiarizedUtterance parse_segment(std::string_view text,
                                std::optional<SpeakerId> previous_last_speaker,
                                bool sanitize = false);

// Stitches the per-segment completions of one utterance back together and
// transfers their speaker labels onto the original words. The output word
// sequence is exactly `original.words` no matter what the LLM produced; only
// the speaker labels move. An empty completion list returns `original`
// unchanged. Throws MissingSegment on segment-index gaps or duplicates.
DiarizedUtterance finalize(const DiarizedUtterance& original,
                           std::vector<CompletionRecord> completions,
                           std::string_view completion_suffix = " [eod]",
                           bool sanitize = true);

}  // namespace diarpost

#endif  // DIARPOST_POSTPROCESS_HPP_
