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

#include "diarpost/jsonl.hpp"

#include <cctype>
#include <istream>
#include <ostream>

namespace diarpost {

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(std::size_t line, const std::string& message) {
  throw DiarError(ErrorCode::kSchema, "line " + std::to_string(line) + ": " + message);
}

std::string require_string(const json& record, const char* field, std::size_t line) {
  auto it = record.find(field);
  if (it == record.end() || !it->is_string()) {
    schema_error(line, std::string("missing or non-string field \"") + field + "\"");
  }
  return it->get<std::string>();
}

DiarizedUtterance utterance_from(const json& record, const char* text_field,
                                 const char* spk_field, std::size_t line, bool sanitize) {
  DiarizedUtterance u;
  u.utterance_id = record.value("utterance_id", "");
  u.words = split_words(require_string(record, text_field, line));
  u.speakers = parse_speaker_list(require_string(record, spk_field, line));
  if (sanitize) u = sanitize_utterance(std::move(u));
  if (auto issue = validate_utterance(u)) {
    schema_error(line, std::string(text_field) + "/" + spk_field + ": " + issue->message);
  }
  return u;
}

}  // namespace

void for_each_jsonl_line(std::istream& in,
                         const std::function<void(json&, std::size_t)>& fn) {
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    bool blank = true;
    for (unsigned char c : line) {
      if (!std::isspace(c)) {
        blank = false;
        break;
      }
    }
    if (blank) continue;
    json record = json::parse(line, nullptr, false);
    if (record.is_discarded() || !record.is_object()) {
      schema_error(line_number, "not a JSON object");
    }
    fn(record, line_number);
  }
}

void write_jsonl_line(std::ostream& out, const json& record) {
  out << record.dump() << '\n';
}

std::vector<std::string> split_words(std::string_view text) {
  std::vector<std::string> words;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    if (end > pos) words.emplace_back(text.substr(pos, end - pos));
    pos = end;
  }
  return words;
}

std::string join_words(std::span<const std::string> words) {
  std::string out;
  for (const std::string& word : words) {
    if (!out.empty()) out += ' ';
    out += word;
  }
  return out;
}

std::vector<SpeakerId> parse_speaker_list(std::string_view text) {
  std::vector<SpeakerId> speakers;
  for (const std::string& token : split_words(text)) {
    try {
      std::size_t used = 0;
      int value = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      speakers.push_back(value);
    } catch (const std::exception&) {
      throw DiarError(ErrorCode::kSchema, "speaker list token \"" + token + "\" is not an integer");
    }
  }
  return speakers;
}

std::string format_speaker_list(std::span<const SpeakerId> speakers) {
  std::string out;
  for (SpeakerId s : speakers) {
    if (!out.empty()) out += ' ';
    out += std::to_string(s);
  }
  return out;
}

bool has_hyp(const json& record) {
  return record.contains("hyp_text") && record.contains("hyp_spk");
}

bool has_ref(const json& record) {
  return record.contains("ref_text") && record.contains("ref_spk");
}

DiarizedUtterance hyp_utterance(const json& record, std::size_t line, bool sanitize) {
  return utterance_from(record, "hyp_text", "hyp_spk", line, sanitize);
}

DiarizedUtterance ref_utterance(const json& record, std::size_t line, bool sanitize) {
  return utterance_from(record, "ref_text", "ref_spk", line, sanitize);
}

void set_hyp(json& record, const DiarizedUtterance& u) {
  record["hyp_text"] = join_words(u.words);
  record["hyp_spk"] = format_speaker_list(u.speakers);
}

OrchestrationInput orchestration_input(const json& record, std::size_t line) {
  OrchestrationInput input;
  std::vector<std::string> words = split_words(require_string(record, "hyp_text", line));

  auto timing_it = record.find("hyp_word_timing");
  if (timing_it == record.end() || !timing_it->is_array()) {
    schema_error(line, "missing or non-array field \"hyp_word_timing\"");
  }
  if (timing_it->size() != words.size()) {
    schema_error(line, "hyp_word_timing has " + std::to_string(timing_it->size()) +
                           " entries for " + std::to_string(words.size()) + " words");
  }
  for (std::size_t i = 0; i < words.size(); ++i) {
    const json& pair = (*timing_it)[i];
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
      schema_error(line, "hyp_word_timing[" + std::to_string(i) + "] is not [start, end]");
    }
    TimedWord word{words[i], pair[0].get<double>(), pair[1].get<double>()};
    if (word.start > word.end) {
      schema_error(line, "hyp_word_timing[" + std::to_string(i) + "] has start > end");
    }
    input.timed_words.push_back(std::move(word));
  }

  auto seg_it = record.find("hyp_spk_segments");
  if (seg_it == record.end() || !seg_it->is_array()) {
    schema_error(line, "missing or non-array field \"hyp_spk_segments\"");
  }
  for (std::size_t i = 0; i < seg_it->size(); ++i) {
    const json& seg = (*seg_it)[i];
    if (!seg.is_object() || !seg.contains("start") || !seg.contains("end") ||
        !seg.contains("speaker")) {
      schema_error(line, "hyp_spk_segments[" + std::to_string(i) +
                             "] needs start, end and speaker");
    }
    SpeakerSegment segment{seg["speaker"].get<SpeakerId>(), seg["start"].get<double>(),
                           seg["end"].get<double>()};
    if (segment.speaker < 1) {
      schema_error(line, "hyp_spk_segments[" + std::to_string(i) + "] speaker is not >= 1");
    }
    if (segment.start > segment.end) {
      schema_error(line, "hyp_spk_segments[" + std::to_string(i) + "] has start > end");
    }
    input.segments.push_back(segment);
  }
  return input;
}

json to_json(const PromptRecord& record) {
  return json{{"utterance_id", record.utterance_id},
              {"segment_index", record.segment_index},
              {"prompt", record.prompt},
              {"word_begin", record.word_begin},
              {"word_end", record.word_end}};
}

PromptRecord prompt_record_from(const json& record, std::size_t line) {
  PromptRecord out;
  out.utterance_id = require_string(record, "utterance_id", line);
  if (!record.contains("segment_index") || !record["segment_index"].is_number_integer()) {
    schema_error(line, "missing or non-integer field \"segment_index\"");
  }
  out.segment_index = record["segment_index"].get<int>();
  out.prompt = require_string(record, "prompt", line);
  out.word_begin = record.value("word_begin", 0u);
  out.word_end = record.value("word_end", 0u);
  return out;
}

json to_json(const CompletionRecord& record) {
  return json{{"utterance_id", record.utterance_id},
              {"segment_index", record.segment_index},
              {"completion", record.completion}};
}

CompletionRecord completion_record_from(const json& record, std::size_t line) {
  CompletionRecord out;
  out.utterance_id = require_string(record, "utterance_id", line);
  if (!record.contains("segment_index") || !record["segment_index"].is_number_integer()) {
    schema_error(line, "missing or non-integer field \"segment_index\"");
  }
  out.segment_index = record["segment_index"].get<int>();
  out.completion = require_string(record, "completion", line);
  return out;
}

json to_json(const TrainingPair& pair) {
  return json{{"utterance_id", pair.utterance_id},
              {"segment_index", pair.segment_index},
              {"flavor", std::string(flavor_name(pair.flavor))},
              {"prompt", pair.prompt},
              {"completion", pair.completion}};
}

}  // namespace diarpost
