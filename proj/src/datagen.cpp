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

#include "diarpost/datagen.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>

#include "diarpost/codec.hpp"
#include "diarpost/rng.hpp"
#include "diarpost/speaker_transfer.hpp"

namespace diarpost {

namespace {

constexpr std::array<std::string_view, 30> kTopics = {
    "AI",        "anime",    "art",       "beauty",        "books",
    "business",  "career",   "comics",    "culture",       "education",
    "entertainment", "fashion", "finance", "fitness",      "food",
    "health",    "history",  "magic",     "manga",         "medicine",
    "movies",    "music",    "parenting", "politics",      "science",
    "sports",    "technology", "travel",  "tv shows",      "video games",
};

constexpr std::array<std::string_view, 11> kScenes = {
    "casual conversation", "consultance", "conference", "customer service",
    "debate",              "event",       "greetings",  "interview",
    "meeting",             "news",        "podcast",
};

struct Turn {
  std::size_t start = 0;
  std::size_t length = 0;
  SpeakerId speaker = 0;
};

std::vector<Turn> split_turns(std::span<const SpeakerId> speakers) {
  std::vector<Turn> turns;
  for (std::size_t i = 0; i < speakers.size();) {
    std::size_t j = i;
    while (j < speakers.size() && speakers[j] == speakers[i]) ++j;
    turns.push_back({i, j - i, speakers[i]});
    i = j;
  }
  return turns;
}

std::vector<TrainingPair> build_pairs(const DiarizedUtterance& prompt_side,
                                      std::span<const SpeakerId> completion_speakers,
                                      Flavor flavor, const PromptConfig& cfg) {
  std::vector<TrainingPair> pairs;
  int index = 0;
  for (const WordRange& range : segment(prompt_side, cfg)) {
    auto words = std::span(prompt_side.words).subspan(range.begin, range.end - range.begin);
    auto prompt_speakers =
        std::span(prompt_side.speakers).subspan(range.begin, range.end - range.begin);
    auto target_speakers = completion_speakers.subspan(range.begin, range.end - range.begin);
    TrainingPair pair;
    pair.utterance_id = prompt_side.utterance_id;
    pair.segment_index = index++;
    pair.flavor = flavor;
    pair.prompt = cfg.prompt_prefix + serialize(words, prompt_speakers) + cfg.prompt_suffix;
    pair.completion = serialize(words, target_speakers) + cfg.completion_suffix;
    pairs.push_back(std::move(pair));
  }
  return pairs;
}

}  // namespace

Flavor flavor_from_name(std::string_view name) {
  if (name == "hyp2ora") return Flavor::kHyp2Ora;
  if (name == "deg2ref") return Flavor::kDeg2Ref;
  if (name == "mixed") return Flavor::kMixed;
  throw DiarError(ErrorCode::kUsage, "unknown flavor \"" + std::string(name) + "\"");
}

std::string_view flavor_name(Flavor flavor) {
  switch (flavor) {
    case Flavor::kHyp2Ora: return "hyp2ora";
    case Flavor::kDeg2Ref: return "deg2ref";
    case Flavor::kMixed: return "mixed";
  }
  return "unknown";
}

std::vector<TrainingPair> build_hyp2ora(const DiarizedUtterance& hyp,
                                        const DiarizedUtterance& ref,
                                        const PromptConfig& cfg) {
  check_utterance(hyp);
  check_utterance(ref);
  std::vector<SpeakerId> oracle =
      transfer_speakers(ref.words, ref.speakers, hyp.words, hyp.speakers);
  return build_pairs(hyp, oracle, Flavor::kHyp2Ora, cfg);
}

std::vector<TrainingPair> build_deg2ref(const DiarizedUtterance& hyp,
                                        const DiarizedUtterance& ref,
                                        const PromptConfig& cfg) {
  check_utterance(hyp);
  check_utterance(ref);
  DiarizedUtterance prompt_side = ref;
  prompt_side.speakers = transfer_speakers(hyp.words, hyp.speakers, ref.words, ref.speakers);
  return build_pairs(prompt_side, ref.speakers, Flavor::kDeg2Ref, cfg);
}

std::vector<TrainingPair> build_mixed(std::vector<TrainingPair> a,
                                      std::vector<TrainingPair> b) {
  std::vector<TrainingPair> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (i < a.size()) out.push_back(std::move(a[i++]));
    if (j < b.size()) out.push_back(std::move(b[j++]));
  }
  return out;
}

// Draw order per turn, fixed forever: short turns draw the flip gate and
// (when it passes and a different speaker exists) the replacement label.
// Long turns draw, in order: the begin gate (+ span length when it passes),
// the end gate (+ span length), the interruption count m, then m times
// (span length, span start, replacement label). Replacements apply only up
// to the per-turn budget; a position already replaced in this turn can be
// overwritten but is counted against the budget once. The first turn has no
// predecessor, so its boundary-bleed steps are skipped without any draws.
std::vector<SpeakerId> degrade_speakers(std::span<const SpeakerId> speakers,
                                        const DegradationParams& params) {
  std::vector<SpeakerId> out(speakers.begin(), speakers.end());
  std::set<SpeakerId> label_set(speakers.begin(), speakers.end());
  if (label_set.size() < 2) return out;
  std::vector<SpeakerId> labels(label_set.begin(), label_set.end());

  Rng rng(params.seed);
  auto different_speaker = [&](SpeakerId current) {
    std::vector<SpeakerId> candidates;
    candidates.reserve(labels.size());
    for (SpeakerId label : labels) {
      if (label != current) candidates.push_back(label);
    }
    return candidates[rng.next_int(0, static_cast<std::int64_t>(candidates.size()) - 1)];
  };

  const std::vector<Turn> turns = split_turns(speakers);
  for (std::size_t t = 0; t < turns.size(); ++t) {
    const Turn& turn = turns[t];
    const std::size_t turn_len = turn.length;

    if (turn_len <= static_cast<std::size_t>(params.flip_len_max)) {
      if (rng.next_bernoulli(params.flip_prob)) {
        SpeakerId replacement = different_speaker(turn.speaker);
        std::fill(out.begin() + turn.start, out.begin() + turn.start + turn_len, replacement);
      }
      continue;
    }

    const std::size_t budget =
        static_cast<std::size_t>(std::floor(params.total_ratio * static_cast<double>(turn_len)));
    std::size_t used = 0;
    std::vector<char> replaced(turn_len, 0);
    auto apply = [&](std::size_t offset, SpeakerId value) {
      if (replaced[offset]) {
        out[turn.start + offset] = value;
      } else if (used < budget) {
        out[turn.start + offset] = value;
        replaced[offset] = 1;
        ++used;
      }
    };
    const std::int64_t span_cap = std::max<std::int64_t>(
        1, std::min<std::int64_t>(
               params.span_len_max,
               static_cast<std::int64_t>(
                   std::floor(params.span_len_ratio * static_cast<double>(turn_len)))));

    if (t > 0) {
      const SpeakerId previous = turns[t - 1].speaker;
      if (rng.next_bernoulli(params.begin_bleed_prob)) {
        std::size_t n = static_cast<std::size_t>(rng.next_int(1, span_cap));
        for (std::size_t k = 0; k < n; ++k) apply(k, previous);
      }
      if (rng.next_bernoulli(params.end_bleed_prob)) {
        std::size_t n = static_cast<std::size_t>(rng.next_int(1, span_cap));
        for (std::size_t k = 0; k < n; ++k) apply(turn_len - 1 - k, previous);
      }
    }

    const std::int64_t interruptions = rng.next_int(0, params.mid_insert_max);
    for (std::int64_t s = 0; s < interruptions; ++s) {
      std::size_t n = static_cast<std::size_t>(rng.next_int(1, span_cap));
      std::size_t start = static_cast<std::size_t>(
          rng.next_int(0, static_cast<std::int64_t>(turn_len - n)));
      SpeakerId replacement = different_speaker(turn.speaker);
      for (std::size_t k = start; k < start + n; ++k) apply(k, replacement);
    }
  }
  return out;
}

std::span<const std::string_view> synthesis_topics() { return kTopics; }
std::span<const std::string_view> synthesis_scenes() { return kScenes; }

std::string build_synthesis_prompt(const SynthesisSpec& spec,
                                   std::string_view example_conversation,
                                   bool strict) {
  if (strict) {
    if (std::find(kTopics.begin(), kTopics.end(), spec.topic) == kTopics.end()) {
      throw DiarError(ErrorCode::kUnknownTopic, "unknown topic \"" + spec.topic + "\"");
    }
    if (std::find(kScenes.begin(), kScenes.end(), spec.scene) == kScenes.end()) {
      throw DiarError(ErrorCode::kUnknownScene, "unknown scene \"" + spec.scene + "\"");
    }
  }
  std::string prompt;
  prompt +=
      "This is an example of an English conversation between two people on the "
      "topic of \"food\" in the scene of \"casual conversation\":\n\n";
  prompt += example_conversation;
  prompt +=
      "\n\nFollowing the format in the above example, please generate an English "
      "conversation between ";
  prompt += std::to_string(spec.num_speakers);
  prompt += " people on the topic of \"";
  prompt += spec.topic;
  prompt += "\" in the scene of \"";
  prompt += spec.scene;
  prompt +=
      "\".\n\n"
      "The conversation should be as meaningful and realistic as possible.\n\n"
      "Each speaker has their own unique identifier (such as <speaker:1> or "
      "<speaker:2>), speaks in their own style, and holds their own opinions and "
      "knowledge.\n\n"
      "Each speaker has a specific role in the conversation, such as the "
      "customer, the assistant, the interviewer, the moderator, or the "
      "participant. This role should not change throughout the conversation.\n\n"
      "Some speaker turns may be short, while others may be longer. The length "
      "of each speaker turn should be appropriate for the context and the amount "
      "of information that needs to be conveyed.\n\n"
      "The speaker turns should also be realistic and natural. Some speakers may "
      "speak more frequently than other speakers, depending on their roles, "
      "personalities, and the context of the conversation.\n\n"
      "At the same time, there could also be disfluencies, hesitations, "
      "interruptions, and other common speech patterns.\n\n"
      "This conversation should have around ";
  prompt += std::to_string(spec.num_words);
  prompt +=
      " words.\n\n"
      "Now directly output the generated conversation below without any "
      "additional comments.\n";
  return prompt;
}

SynthesisSpec sample_synthesis_spec(std::uint64_t seed) {
  Rng rng(seed);
  SynthesisSpec spec;
  spec.topic = kTopics[rng.next_int(0, static_cast<std::int64_t>(kTopics.size()) - 1)];
  spec.scene = kScenes[rng.next_int(0, static_cast<std::int64_t>(kScenes.size()) - 1)];
  spec.num_speakers = static_cast<int>(rng.next_int(2, 7));
  spec.num_words = static_cast<int>(rng.next_int(100, 2000));
  return spec;
}

}  // namespace diarpost
