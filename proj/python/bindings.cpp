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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "diarpost/codec.hpp"
#include "diarpost/datagen.hpp"
#include "diarpost/metrics.hpp"
#include "diarpost/orchestrate.hpp"
#include "diarpost/postprocess.hpp"
#include "diarpost/prompt.hpp"
#include "diarpost/speaker_transfer.hpp"
#include "diarpost/types.hpp"
#include "diarpost/version.hpp"

namespace py = pybind11;
using namespace diarpost;

namespace {

DiarizedUtterance make_utterance(std::vector<std::string> words,
                                 std::vector<SpeakerId> speakers) {
  DiarizedUtterance u;
  u.words = std::move(words);
  u.speakers = std::move(speakers);
  check_utterance(u);
  return u;
}

PromptConfig make_config(const std::string& prompt_prefix, const std::string& prompt_suffix,
                         const std::string& completion_suffix, std::size_t max_measure,
                         const std::string& unit) {
  PromptConfig cfg;
  cfg.prompt_prefix = prompt_prefix;
  cfg.prompt_suffix = prompt_suffix;
  cfg.completion_suffix = completion_suffix;
  cfg.max_measure = max_measure;
  cfg.measure_unit =
      unit == "words" ? MeasureUnit::kWhitespaceWords : MeasureUnit::kCharacters;
  return cfg;
}

DegradationParams make_params(std::uint64_t seed, int flip_len_max, double flip_prob,
                              double begin_bleed_prob, double end_bleed_prob,
                              int mid_insert_max, int span_len_max, double span_len_ratio,
                              double total_ratio) {
  DegradationParams params;
  params.seed = seed;
  params.flip_len_max = flip_len_max;
  params.flip_prob = flip_prob;
  params.begin_bleed_prob = begin_bleed_prob;
  params.end_bleed_prob = end_bleed_prob;
  params.mid_insert_max = mid_insert_max;
  params.span_len_max = span_len_max;
  params.span_len_ratio = span_len_ratio;
  params.total_ratio = total_ratio;
  return params;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Speaker-diarization post-processing: compact transcript codec, "
            "word/segment orchestration, speaker transfer, prompt building, "
            "completion parsing, metrics and training-data generation.";
  m.attr("__version__") = kVersion;
  m.attr("SCHEMA_VERSION") = kSchemaVersion;

  py::register_exception<DiarError>(m, "DiarError");

  m.def(
      "validate",
      [](std::vector<std::string> words, std::vector<SpeakerId> speakers)
          -> std::optional<std::string> {
        DiarizedUtterance u;
        u.words = std::move(words);
        u.speakers = std::move(speakers);
        if (auto issue = validate_utterance(u)) return issue->message;
        return std::nullopt;
      },
      py::arg("words"), py::arg("speakers"),
      "Returns None if (words, speakers) is a valid utterance, else the first problem.");

  m.def(
      "serialize",
      [](std::vector<std::string> words, std::vector<SpeakerId> speakers) {
        return serialize(make_utterance(std::move(words), std::move(speakers)));
      },
      py::arg("words"), py::arg("speakers"),
      "Compact text form: speaker tokens only at the start and at speaker changes.");

  m.def(
      "parse",
      [](const std::string& text, SpeakerId fallback_speaker, bool sanitize) {
        DiarizedUtterance u = parse(text, fallback_speaker, sanitize);
        return py::make_tuple(u.words, u.speakers);
      },
      py::arg("text"), py::arg("fallback_speaker") = 1, py::arg("sanitize") = false,
      "Inverse of serialize; returns (words, speakers).");

  m.def("interval_overlap", &interval_overlap, py::arg("a_start"), py::arg("a_end"),
        py::arg("b_start"), py::arg("b_end"));
  m.def("interval_distance", &interval_distance, py::arg("a_start"), py::arg("a_end"),
        py::arg("b_start"), py::arg("b_end"));

  m.def(
      "orchestrate",
      [](std::vector<std::string> words,
         std::vector<std::pair<double, double>> word_timing,
         std::vector<std::tuple<int, double, double>> segments) {
        if (words.size() != word_timing.size()) {
          throw DiarError(ErrorCode::kLengthMismatch,
                          "words and word_timing must have equal length");
        }
        OrchestrationInput input;
        for (std::size_t i = 0; i < words.size(); ++i) {
          input.timed_words.push_back(
              {std::move(words[i]), word_timing[i].first, word_timing[i].second});
        }
        for (const auto& [speaker, start, end] : segments) {
          input.segments.push_back({speaker, start, end});
        }
        return orchestrate(input).speakers;
      },
      py::arg("words"), py::arg("word_timing"), py::arg("segments"),
      "Assigns one speaker per word by maximal overlap, else nearest segment.\n"
      "word_timing is [(start, end), ...]; segments is [(speaker, start, end), ...].");

  m.def(
      "measure",
      [](const std::string& text, const std::string& unit) {
        return measure(text, unit == "words" ? MeasureUnit::kWhitespaceWords
                                             : MeasureUnit::kCharacters);
      },
      py::arg("text"), py::arg("unit") = "characters");

  m.def(
      "build_prompts",
      [](std::vector<std::string> words, std::vector<SpeakerId> speakers,
         const std::string& prompt_prefix, const std::string& prompt_suffix,
         std::size_t max_measure, const std::string& unit) {
        DiarizedUtterance u = make_utterance(std::move(words), std::move(speakers));
        PromptConfig cfg =
            make_config(prompt_prefix, prompt_suffix, " [eod]", max_measure, unit);
        py::list out;
        for (const PromptRecord& record : build_prompts(u, cfg)) {
          py::dict item;
          item["segment_index"] = record.segment_index;
          item["prompt"] = record.prompt;
          item["word_begin"] = record.word_begin;
          item["word_end"] = record.word_end;
          out.append(std::move(item));
        }
        return out;
      },
      py::arg("words"), py::arg("speakers"), py::arg("prompt_prefix") = "",
      py::arg("prompt_suffix") = " --> ", py::arg("max_measure") = 6000,
      py::arg("unit") = "characters",
      "Splits the utterance to fit the budget and renders one prompt per slice.");

  m.def(
      "transfer_speakers",
      [](std::vector<std::string> src_words, std::vector<SpeakerId> src_speakers,
         std::vector<std::string> tgt_words, std::vector<SpeakerId> tgt_speakers) {
        if (src_words.size() != src_speakers.size() ||
            tgt_words.size() != tgt_speakers.size()) {
          throw DiarError(ErrorCode::kLengthMismatch,
                          "word and speaker sequences must have equal length");
        }
        return transfer_speakers(src_words, src_speakers, tgt_words, tgt_speakers);
      },
      py::arg("src_words"), py::arg("src_speakers"), py::arg("tgt_words"),
      py::arg("tgt_speakers"),
      "Transfers source speaker labels onto the target words; the target\n"
      "transcript is preserved exactly.");

  m.def(
      "edit_distance",
      [](std::vector<std::string> a, std::vector<std::string> b) {
        return levenshtein_align(a, b).distance;
      },
      py::arg("a"), py::arg("b"));

  m.def("truncate_completion", &truncate_completion, py::arg("text"),
        py::arg("completion_suffix") = " [eod]");

  m.def(
      "finalize",
      [](std::vector<std::string> words, std::vector<SpeakerId> speakers,
         std::vector<std::string> completions, const std::string& completion_suffix,
         bool sanitize) {
        DiarizedUtterance original = make_utterance(std::move(words), std::move(speakers));
        std::vector<CompletionRecord> records;
        for (std::size_t i = 0; i < completions.size(); ++i) {
          records.push_back({original.utterance_id, static_cast<int>(i),
                             std::move(completions[i])});
        }
        return finalize(original, std::move(records), completion_suffix, sanitize).speakers;
      },
      py::arg("words"), py::arg("speakers"), py::arg("completions"),
      py::arg("completion_suffix") = " [eod]", py::arg("sanitize") = true,
      "Parses per-segment completions (in order) and returns the refined\n"
      "speakers for the original words.");

  m.def(
      "wer",
      [](std::vector<std::string> ref_words, std::vector<std::string> hyp_words) {
        return wer_counts(ref_words, hyp_words);
      },
      py::arg("ref_words"), py::arg("hyp_words"), "Returns (errors, ref_len).");

  m.def(
      "wder",
      [](std::vector<std::string> ref_words, std::vector<SpeakerId> ref_speakers,
         std::vector<std::string> hyp_words, std::vector<SpeakerId> hyp_speakers) {
        return wder_counts(make_utterance(std::move(ref_words), std::move(ref_speakers)),
                           make_utterance(std::move(hyp_words), std::move(hyp_speakers)));
      },
      py::arg("ref_words"), py::arg("ref_speakers"), py::arg("hyp_words"),
      py::arg("hyp_speakers"),
      "Returns (wrong-speaker pairs, matched+substituted pairs).");

  m.def(
      "cpwer",
      [](std::vector<std::string> ref_words, std::vector<SpeakerId> ref_speakers,
         std::vector<std::string> hyp_words, std::vector<SpeakerId> hyp_speakers,
         int speaker_limit) {
        return cpwer_counts(make_utterance(std::move(ref_words), std::move(ref_speakers)),
                            make_utterance(std::move(hyp_words), std::move(hyp_speakers)),
                            speaker_limit);
      },
      py::arg("ref_words"), py::arg("ref_speakers"), py::arg("hyp_words"),
      py::arg("hyp_speakers"), py::arg("speaker_limit") = kDefaultCpwerSpeakerLimit,
      "Returns (errors, ref_len) under the best speaker pairing.");

  m.def(
      "degrade_speakers",
      [](std::vector<SpeakerId> speakers, std::uint64_t seed, int flip_len_max,
         double flip_prob, double begin_bleed_prob, double end_bleed_prob,
         int mid_insert_max, int span_len_max, double span_len_ratio, double total_ratio) {
        return degrade_speakers(speakers,
                                make_params(seed, flip_len_max, flip_prob, begin_bleed_prob,
                                            end_bleed_prob, mid_insert_max, span_len_max,
                                            span_len_ratio, total_ratio));
      },
      py::arg("speakers"), py::arg("seed") = 0, py::arg("flip_len_max") = 5,
      py::arg("flip_prob") = 0.05, py::arg("begin_bleed_prob") = 0.05,
      py::arg("end_bleed_prob") = 0.05, py::arg("mid_insert_max") = 2,
      py::arg("span_len_max") = 8, py::arg("span_len_ratio") = 0.1,
      py::arg("total_ratio") = 0.2,
      "Seeded random corruption of a speaker sequence (whole-turn flips,\n"
      "boundary bleed, mid-turn interruptions under a per-turn budget).");

  m.def(
      "build_synthesis_prompt",
      [](const std::string& topic, const std::string& scene, int num_speakers, int num_words,
         const std::string& example_conversation, bool strict) {
        return build_synthesis_prompt({topic, scene, num_speakers, num_words},
                                      example_conversation, strict);
      },
      py::arg("topic"), py::arg("scene"), py::arg("num_speakers") = 2,
      py::arg("num_words") = 500, py::arg("example_conversation") = "",
      py::arg("strict") = true);

  m.def(
      "sample_synthesis_spec",
      [](std::uint64_t seed) {
        SynthesisSpec spec = sample_synthesis_spec(seed);
        py::dict out;
        out["topic"] = spec.topic;
        out["scene"] = spec.scene;
        out["num_speakers"] = spec.num_speakers;
        out["num_words"] = spec.num_words;
        return out;
      },
      py::arg("seed"));

  m.def("zero_shot_prefix", [] { return std::string(zero_shot_prefix()); });
  m.def("one_shot_prefix", [] { return std::string(one_shot_prefix()); });
  m.def("topics", [] {
    std::vector<std::string> out;
    for (std::string_view topic : synthesis_topics()) out.emplace_back(topic);
    return out;
  });
  m.def("scenes", [] {
    std::vector<std::string> out;
    for (std::string_view scene : synthesis_scenes()) out.emplace_back(scene);
    return out;
  });
}
