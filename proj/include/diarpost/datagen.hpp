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

#ifndef DIARPOST_DATAGEN_HPP_
#define DIARPOST_DATAGEN_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "diarpost/prompt.hpp"
#include "diarpost/types.hpp"

namespace diarpost {

// Training corpora come in three flavors:
//   hyp2ora — prompts carry the hypothesis speakers, completions the oracle
//             speakers transferred from the reference;
//   deg2ref — prompts carry degraded reference speakers transferred from the
//             hypothesis, completions the true reference speakers;
//   mixed   — the two interleaved pair-by-pair.
enum class Flavor { kHyp2Ora, kDeg2Ref, kMixed };

Flavor flavor_from_name(std::string_view name);
std::string_view flavor_name(Flavor flavor);

struct TrainingPair {
  std::string utterance_id;
  int segment_index = 0;
  Flavor flavor = Flavor::kHyp2Ora;
  std::string prompt;
  std::string completion;
};

// In every pair the prompt and completion render the SAME word slice; only
// the speaker labels differ. Segmentation follows the prompt-side rendering
// and the completion reuses the identical word ranges.
std::vector<TrainingPair> build_hyp2ora(const DiarizedUtterance& hyp,
                                        const DiarizedUtterance& ref,
                                        const PromptConfig& cfg);
std::vector<TrainingPair> build_deg2ref(const DiarizedUtterance& hyp,
                                        const DiarizedUtterance& ref,
                                        const PromptConfig& cfg);

// Alternates a0, b0, a1, b1, ...; the longer tail is appended as-is.
std::vector<TrainingPair> build_mixed(std::vector<TrainingPair> a,
                                      std::vector<TrainingPair> b);

// Knobs of the randomized speaker degradation. Short turns (length <=
// flip_len_max) are flipped wholesale with probability flip_prob; longer
// turns get boundary bleed from the previous turn and random mid-turn
// interruptions, capped by a per-turn replacement budget.
struct DegradationParams {
  int flip_len_max = 5;          // longest turn eligible for a whole flip
  double flip_prob = 0.05;
  double begin_bleed_prob = 0.05;
  double end_bleed_prob = 0.05;
  int mid_insert_max = 2;        // interruption segments per turn, drawn in [0, this]
  int span_len_max = 8;          // hard cap on one replaced span
  double span_len_ratio = 0.1;   // span cap as a fraction of the turn length
  double total_ratio = 0.2;      // per-turn replaced-position budget fraction
  std::uint64_t seed = 0;
};

// Seeded random corruption of a speaker sequence; same (input, params, seed)
// reproduces byte-identical output. Sequences with fewer than two distinct
// speakers are returned unchanged. Draw order is documented in the
// implementation and is part of the data format.
std::vector<SpeakerId> degrade_speakers(std::span<const SpeakerId> speakers,
                                        const DegradationParams& params);

// Conversation-synthesis prompt inputs. Topics/scenes come from the fixed
// catalogs below; speaker and word counts from the stated ranges.
struct SynthesisSpec {
  std::string topic;
  std::string scene;
  int num_speakers = 2;    // in [2, 7]
  int num_words = 100;     // in [100, 2000]
};

std::span<const std::string_view> synthesis_topics();  // 30 entries
std::span<const std::string_view> synthesis_scenes();  // 11 entries

// Fills the synthesis prompt template. With strict=true, unknown topics or
// scenes are rejected (UnknownTopic / UnknownScene).
std::string build_synthesis_prompt(const SynthesisSpec& spec,
                                   std::string_view example_conversation,
                                   bool strict = true);

// Uniform draw of a spec: topic over 30 topics, scene over 11 scenes,
// speakers in [2,7], words in [100,2000]; deterministic per seed.
SynthesisSpec sample_synthesis_spec(std::uint64_t seed);

}  // namespace diarpost

#endif  // DIARPOST_DATAGEN_HPP_
