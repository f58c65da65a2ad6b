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

#ifndef DIARPOST_METRICS_HPP_
#define DIARPOST_METRICS_HPP_

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "diarpost/types.hpp"

namespace diarpost {

// Numerator/denominator tallies for one utterance (or a micro-aggregated
// batch). Rates are only formed at reporting time so datasets aggregate by
// summing counts.
struct MetricCounts {
  long long wer_errors = 0;
  long long wer_ref_len = 0;
  long long wder_num = 0;   // aligned word pairs with a wrong speaker
  long long wder_den = 0;   // matched + substituted word pairs
  long long cpwer_errors = 0;
  long long cpwer_ref_len = 0;

  MetricCounts& operator+=(const MetricCounts& other);
};

struct MetricRates {
  std::optional<double> wer;
  std::optional<double> wder;
  std::optional<double> cpwer;
};

// Guardrail for the per-speaker stream matching: utterances where both sides
// have more speakers than this are rejected rather than silently expensive.
inline constexpr int kDefaultCpwerSpeakerLimit = 8;

// (edit errors, reference length).
std::pair<long long, long long> wer_counts(std::span<const std::string> ref_words,
                                           std::span<const std::string> hyp_words);

// (wrong-speaker pairs, matched+substituted pairs): hyp words are aligned to
// ref words, insertions are excluded, and hyp speakers are first mapped onto
// ref speakers by the agreement-maximizing assignment so a global relabeling
// of either side never counts as an error.
std::pair<long long, long long> wder_counts(const DiarizedUtterance& ref,
                                            const DiarizedUtterance& hyp);

// (edit errors, reference length) of per-speaker concatenated streams under
// the best pairing of hyp speakers to ref speakers. The pairing objective is
// one WER term per matched stream pair (unmatched streams count in full), so
// the exact optimum over all speaker permutations is a linear assignment
// problem; no factorial search is needed. Throws TooManySpeakers when both
// sides exceed `speaker_limit`.
std::pair<long long, long long> cpwer_counts(const DiarizedUtterance& ref,
                                             const DiarizedUtterance& hyp,
                                             int speaker_limit = kDefaultCpwerSpeakerLimit);

// All three metrics for one (ref, hyp) pair.
MetricCounts utterance_counts(const DiarizedUtterance& ref, const DiarizedUtterance& hyp,
                              int cpwer_speaker_limit = kDefaultCpwerSpeakerLimit);

// Micro aggregation: sum of numerators over sum of denominators. A zero
// denominator (including an empty list) reports nullopt, not 0.
MetricCounts aggregate(std::span<const MetricCounts> counts);
MetricRates rates_from(const MetricCounts& counts);

}  // namespace diarpost

#endif  // DIARPOST_METRICS_HPP_
