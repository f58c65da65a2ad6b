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

#ifndef DIARPOST_ORCHESTRATE_HPP_
#define DIARPOST_ORCHESTRATE_HPP_

#include <span>
#include <string>

#include "diarpost/types.hpp"

namespace diarpost {

// Timed ASR words plus diarizer segments, both sorted by start time
// (words tie-broken by end time).
struct OrchestrationInput {
  std::vector<TimedWord> timed_words;
  std::vector<SpeakerSegment> segments;
};

// Overlap length of two intervals in seconds; 0 when disjoint.
double interval_overlap(double a_start, double a_end, double b_start, double b_end);

// Gap between two intervals' nearest boundaries; 0 when they overlap.
double interval_distance(double a_start, double a_end, double b_start, double b_end);

// Associates each word with a speaker: the segment with the largest overlap
// wins; a word overlapping nothing takes the segment with the smallest
// boundary distance. Ties go to the segment with the earlier start time,
// then the lower speaker label. Word order is preserved.
DiarizedUtterance orchestrate(const OrchestrationInput& input,
                              std::string utterance_id = "");

}  // namespace diarpost

#endif  // DIARPOST_ORCHESTRATE_HPP_
