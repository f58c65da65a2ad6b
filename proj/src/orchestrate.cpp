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

#include "diarpost/orchestrate.hpp"

#include <algorithm>

namespace diarpost {

double interval_overlap(double a_start, double a_end, double b_start, double b_end) {
  return std::max(0.0, std::min(a_end, b_end) - std::max(a_start, b_start));
}

double interval_distance(double a_start, double a_end, double b_start, double b_end) {
  return std::max(0.0, std::max(a_start - b_end, b_start - a_end));
}

namespace {

// Earlier start wins ties; among equal starts, the lower speaker label.
bool tie_prefer(const SpeakerSegment& a, const SpeakerSegment& b) {
  if (a.start != b.start) return a.start < b.start;
  return a.speaker < b.speaker;
}

}  // namespace

DiarizedUtterance orchestrate(const OrchestrationInput& input, std::string utterance_id) {
  DiarizedUtterance out;
  out.utterance_id = std::move(utterance_id);
  if (input.timed_words.empty()) return out;
  if (input.segments.empty()) {
    throw DiarError(ErrorCode::kNoSegments,
                    "orchestrate: no speaker segments for utterance " + out.utterance_id);
  }

  out.words.reserve(input.timed_words.size());
  out.speakers.reserve(input.timed_words.size());
  for (const TimedWord& word : input.timed_words) {
    const SpeakerSegment* best_overlap_seg = nullptr;
    double best_overlap = 0.0;
    const SpeakerSegment* best_distance_seg = nullptr;
    double best_distance = 0.0;
    for (const SpeakerSegment& seg : input.segments) {
      double ovl = interval_overlap(word.start, word.end, seg.start, seg.end);
      if (ovl > 0.0 &&
          (best_overlap_seg == nullptr || ovl > best_overlap ||
           (ovl == best_overlap && tie_prefer(seg, *best_overlap_seg)))) {
        best_overlap_seg = &seg;
        best_overlap = ovl;
      }
      double dist = interval_distance(word.start, word.end, seg.start, seg.end);
      if (best_distance_seg == nullptr || dist < best_distance ||
          (dist == best_distance && tie_prefer(seg, *best_distance_seg))) {
        best_distance_seg = &seg;
        best_distance = dist;
      }
    }
    const SpeakerSegment* chosen =
        best_overlap_seg != nullptr ? best_overlap_seg : best_distance_seg;
    out.words.push_back(word.word);
    out.speakers.push_back(chosen->speaker);
  }
  return out;
}

}  // namespace diarpost
