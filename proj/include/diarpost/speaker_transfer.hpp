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

#ifndef DIARPOST_SPEAKER_TRANSFER_HPP_
#define DIARPOST_SPEAKER_TRANSFER_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "diarpost/assignment.hpp"
#include "diarpost/types.hpp"

namespace diarpost {

enum class EditKind { kMatch, kSubstitute, kDelete, kInsert };

inline constexpr std::size_t kNoIndex = static_cast<std::size_t>(-1);

// One edit step. Match/Substitute carry both indices, Delete only a source
// index, Insert only a target index.
struct EditOp {
  EditKind kind;
  std::size_t src = kNoIndex;
  std::size_t tgt = kNoIndex;

  bool operator==(const EditOp&) const = default;
};

struct Alignment {
  std::vector<EditOp> ops;
  long long distance = 0;  // substitutions + insertions + deletions
};

// Minimal unit-cost edit alignment of src onto tgt. Backtrace ties are
// resolved Match/Substitute first, then Delete, then Insert, which keeps the
// alignment dense and identical across platforms.
Alignment levenshtein_align(std::span<const std::string> src,
                            std::span<const std::string> tgt);

// Carries source speakers over the alignment onto target positions. Inserted
// target positions get kBlankSpeaker; deleted source positions are dropped.
std::vector<SpeakerId> project_speakers(const Alignment& alignment,
                                        std::span<const SpeakerId> src_speakers,
                                        std::size_t tgt_len);

// counts[i-1][j-1] = number of positions where aligned == i and target == j,
// over labels 1..K with K the largest label seen on either side. Blank
// aligned positions contribute nothing.
CostMatrix speaker_agreement_counts(std::span<const SpeakerId> aligned,
                                    std::span<const SpeakerId> target);

// Transfers source speaker labels onto the target word sequence:
// align the words, project the source speakers, resolve the label
// permutation with an agreement-maximizing assignment, and keep the target's
// own label wherever the source offers none. The target transcript is never
// modified; the result always has one label per target word.
std::vector<SpeakerId> transfer_speakers(std::span<const std::string> src_words,
                                         std::span<const SpeakerId> src_speakers,
                                         std::span<const std::string> tgt_words,
                                         std::span<const SpeakerId> tgt_speakers);

}  // namespace diarpost

#endif  // DIARPOST_SPEAKER_TRANSFER_HPP_
