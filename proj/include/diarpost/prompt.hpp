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

#ifndef DIARPOST_PROMPT_HPP_
#define DIARPOST_PROMPT_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "diarpost/types.hpp"

namespace diarpost {

enum class MeasureUnit { kCharacters, kWhitespaceWords };

// Length budgeting for prompts. The unit is a model-independent proxy for a
// tokenizer limit; characters with a 6000 budget is the default. The budget
// applies to the fully rendered prompt, so the prefix and suffix count.
struct PromptConfig {
  std::string prompt_prefix;
  std::string prompt_suffix = " --> ";
  std::string completion_suffix = " [eod]";
  std::size_t max_measure = 6000;
  MeasureUnit measure_unit = MeasureUnit::kCharacters;
};

// Half-open word index range into the source utterance.
struct WordRange {
  std::size_t begin = 0;
  std::size_t end = 0;

  bool operator==(const WordRange&) const = default;
};

struct PromptRecord {
  std::string utterance_id;
  int segment_index = 0;
  std::string prompt;
  std::size_t word_begin = 0;
  std::size_t word_end = 0;
};

// Unicode scalar count for kCharacters; whitespace-separated token count for
// kWhitespaceWords.
std::size_t measure(std::string_view text, MeasureUnit unit);

// Splits `u` into slices whose rendered prompts fit cfg.max_measure, by
// recursive binary partition of the word sequence at floor(M/2). The ranges
// partition [0, M) in order. Throws UnsplittableSegment when a single word
// cannot fit the budget.
std::vector<WordRange> segment(const DiarizedUtterance& u, const PromptConfig& cfg);

// Renders one prompt per slice: prefix + compact text + suffix.
std::vector<PromptRecord> build_prompts(const DiarizedUtterance& u, const PromptConfig& cfg);

// Instruction presets for models that were not finetuned on this task.
std::string_view zero_shot_prefix();
std::string_view one_shot_prefix();

}  // namespace diarpost

#endif  // DIARPOST_PROMPT_HPP_
