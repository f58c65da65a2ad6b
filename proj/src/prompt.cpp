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

#include "diarpost/prompt.hpp"

#include <cctype>
#include <span>

#include "diarpost/codec.hpp"

namespace diarpost {

namespace {

constexpr std::string_view kZeroShotPrefix =
    "In the speaker diarization transcript below, some words are potentially "
    "misplaced. Please correct those words and move them to the right speaker. "
    "Directly show the corrected transcript without explaining what changes "
    "were made or why you made those changes.\n";

constexpr std::string_view kOneShotPrefix =
    "In the speaker diarization transcript below, some words are potentially "
    "misplaced. Please correct those words and move them to the right speaker. "
    "For example, given this input transcript,\n"
    "\n"
    "<spk:1> How are you doing today? I\n"
    "<spk:2> am doing very well. How was everything at the\n"
    "<spk:1> party? Oh, the party? It was awesome. We had lots of fun. Good\n"
    "<spk:2> to hear!\n"
    "\n"
    "The correct output transcript should be:\n"
    "\n"
    "<spk:1> How are you doing today?\n"
    "<spk:2> I am doing very well. How was everything at the party?\n"
    "<spk:1> Oh, the party? It was awesome. We had lots of fun. <spk:2> Good to "
    "hear!\n"
    "\n"
    "Now, please correct the transcript below.\n";

void check_config(const PromptConfig& cfg) {
  std::size_t overhead =
      measure(cfg.prompt_prefix, cfg.measure_unit) + measure(cfg.prompt_suffix, cfg.measure_unit);
  if (cfg.max_measure <= overhead + 1) {
    throw DiarError(ErrorCode::kInvalidPromptConfig,
                    "max_measure " + std::to_string(cfg.max_measure) +
                        " leaves no room after prefix+suffix measure " +
                        std::to_string(overhead));
  }
}

std::string render(const DiarizedUtterance& u, std::size_t begin, std::size_t end,
                   const PromptConfig& cfg) {
  std::string body = serialize(std::span(u.words).subspan(begin, end - begin),
                               std::span(u.speakers).subspan(begin, end - begin));
  return cfg.prompt_prefix + body + cfg.prompt_suffix;
}

void split_range(const DiarizedUtterance& u, const PromptConfig& cfg, std::size_t begin,
                 std::size_t end, std::vector<WordRange>& out) {
  if (measure(render(u, begin, end, cfg), cfg.measure_unit) <= cfg.max_measure) {
    out.push_back({begin, end});
    return;
  }
  if (end - begin <= 1) {
    throw DiarError(ErrorCode::kUnsplittableSegment,
                    "word at index " + std::to_string(begin) +
                        " cannot fit the prompt budget of " +
                        std::to_string(cfg.max_measure));
  }
  std::size_t mid = begin + (end - begin) / 2;
  split_range(u, cfg, begin, mid, out);
  split_range(u, cfg, mid, end, out);
}

}  // namespace

std::size_t measure(std::string_view text, MeasureUnit unit) {
  if (unit == MeasureUnit::kCharacters) {
    // Count UTF-8 code points: bytes that are not continuation bytes.
    std::size_t n = 0;
    for (unsigned char c : text) {
      if ((c & 0xC0) != 0x80) ++n;
    }
    return n;
  }
  std::size_t n = 0;
  bool in_token = false;
  for (unsigned char c : text) {
    bool space = std::isspace(c) != 0;
    if (!space && !in_token) ++n;
    in_token = !space;
  }
  return n;
}

std::vector<WordRange> segment(const DiarizedUtterance& u, const PromptConfig& cfg) {
  check_config(cfg);
  check_utterance(u);
  std::vector<WordRange> out;
  split_range(u, cfg, 0, u.words.size(), out);
  return out;
}

std::vector<PromptRecord> build_prompts(const DiarizedUtterance& u, const PromptConfig& cfg) {
  std::vector<PromptRecord> prompts;
  int index = 0;
  for (const WordRange& range : segment(u, cfg)) {
    prompts.push_back({u.utterance_id, index++, render(u, range.begin, range.end, cfg),
                       range.begin, range.end});
  }
  return prompts;
}

std::string_view zero_shot_prefix() { return kZeroShotPrefix; }
std::string_view one_shot_prefix() { return kOneShotPrefix; }

}  // namespace diarpost
