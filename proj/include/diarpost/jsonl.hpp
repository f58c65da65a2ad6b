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

#ifndef DIARPOST_JSONL_HPP_
#define DIARPOST_JSONL_HPP_

#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "diarpost/datagen.hpp"
#include "diarpost/orchestrate.hpp"
#include "diarpost/postprocess.hpp"
#include "diarpost/prompt.hpp"
#include "diarpost/types.hpp"

namespace diarpost {

// All files are JSONL: one UTF-8 JSON object per '\n'-terminated line.
// Utterance records use space-separated word/label strings ("hyp_text",
// "hyp_spk", optional "ref_text"/"ref_spk", optional "hyp_word_timing" as
// [[start,end],...] and "hyp_spk_segments" as [{start,end,speaker},...]).
// Unknown fields pass through commands untouched.

// Calls `fn(record, line_number)` per line; skips blank lines. Parse
// failures throw SchemaError tagged with the 1-based line number.
void for_each_jsonl_line(std::istream& in,
                         const std::function<void(nlohmann::json&, std::size_t)>& fn);

void write_jsonl_line(std::ostream& out, const nlohmann::json& record);

std::vector<std::string> split_words(std::string_view text);
std::string join_words(std::span<const std::string> words);
std::vector<SpeakerId> parse_speaker_list(std::string_view text);
std::string format_speaker_list(std::span<const SpeakerId> speakers);

// Typed views over an utterance record. `line` is used in error messages.
bool has_hyp(const nlohmann::json& record);
bool has_ref(const nlohmann::json& record);
DiarizedUtterance hyp_utterance(const nlohmann::json& record, std::size_t line,
                                bool sanitize = false);
DiarizedUtterance ref_utterance(const nlohmann::json& record, std::size_t line,
                                bool sanitize = false);
void set_hyp(nlohmann::json& record, const DiarizedUtterance& u);

// Timed words + segments for orchestration.
OrchestrationInput orchestration_input(const nlohmann::json& record, std::size_t line);

// Prompt / completion / training-pair record conversions.
nlohmann::json to_json(const PromptRecord& record);
PromptRecord prompt_record_from(const nlohmann::json& json, std::size_t line);
nlohmann::json to_json(const CompletionRecord& record);
CompletionRecord completion_record_from(const nlohmann::json& json, std::size_t line);
nlohmann::json to_json(const TrainingPair& pair);

}  // namespace diarpost

#endif  // DIARPOST_JSONL_HPP_
