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

#include "diarpost/metrics.hpp"

#include <algorithm>
#include <map>

#include "diarpost/assignment.hpp"
#include "diarpost/speaker_transfer.hpp"

namespace diarpost {

namespace {

// Words of each speaker in original order, keyed by label (sorted).
std::map<SpeakerId, std::vector<std::string>> speaker_streams(const DiarizedUtterance& u) {
  std::map<SpeakerId, std::vector<std::string>> streams;
  for (std::size_t i = 0; i < u.words.size(); ++i) {
    streams[u.speakers[i]].push_back(u.words[i]);
  }
  return streams;
}

}  // namespace

MetricCounts& MetricCounts::operator+=(const MetricCounts& other) {
  wer_errors += other.wer_errors;
  wer_ref_len += other.wer_ref_len;
  wder_num += other.wder_num;
  wder_den += other.wder_den;
  cpwer_errors += other.cpwer_errors;
  cpwer_ref_len += other.cpwer_ref_len;
  return *this;
}

std::pair<long long, long long> wer_counts(std::span<const std::string> ref_words,
                                           std::span<const std::string> hyp_words) {
  Alignment alignment = levenshtein_align(hyp_words, ref_words);
  return {alignment.distance, static_cast<long long>(ref_words.size())};
}

std::pair<long long, long long> wder_counts(const DiarizedUtterance& ref,
                                            const DiarizedUtterance& hyp) {
  check_utterance(ref);
  check_utterance(hyp);

  Alignment alignment = levenshtein_align(hyp.words, ref.words);

  // Agreement counts over matched/substituted pairs only; insertions and
  // deletions sit outside the denominator.
  SpeakerId max_label = 0;
  for (SpeakerId s : ref.speakers) max_label = std::max(max_label, s);
  for (SpeakerId s : hyp.speakers) max_label = std::max(max_label, s);
  CostMatrix counts(max_label, std::vector<std::int64_t>(max_label, 0));
  long long pairs = 0;
  for (const EditOp& op : alignment.ops) {
    if (op.kind == EditKind::kMatch || op.kind == EditKind::kSubstitute) {
      ++counts[hyp.speakers[op.src] - 1][ref.speakers[op.tgt] - 1];
      ++pairs;
    }
  }
  long long agreements = max_agreement_value(counts);
  return {pairs - agreements, pairs};
}

std::pair<long long, long long> cpwer_counts(const DiarizedUtterance& ref,
                                             const DiarizedUtterance& hyp,
                                             int speaker_limit) {
  check_utterance(ref);
  check_utterance(hyp);

  auto ref_streams = speaker_streams(ref);
  auto hyp_streams = speaker_streams(hyp);
  const std::size_t n_ref = ref_streams.size();
  const std::size_t n_hyp = hyp_streams.size();
  if (static_cast<int>(std::min(n_ref, n_hyp)) > speaker_limit) {
    throw DiarError(ErrorCode::kTooManySpeakers,
                    "cpwer: " + std::to_string(n_ref) + " reference and " +
                        std::to_string(n_hyp) + " hypothesis speakers exceed the limit of " +
                        std::to_string(speaker_limit));
  }

  // Pairwise stream edit distances, padded with empty streams to a square
  // matrix; a stream matched against nothing costs its full length.
  const std::size_t k = std::max<std::size_t>(std::max(n_ref, n_hyp), 1);
  std::vector<std::span<const std::string>> ref_list(k), hyp_list(k);
  {
    std::size_t i = 0;
    for (const auto& [label, words] : ref_streams) ref_list[i++] = words;
    i = 0;
    for (const auto& [label, words] : hyp_streams) hyp_list[i++] = words;
  }
  CostMatrix cost(k, std::vector<std::int64_t>(k, 0));
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t h = 0; h < k; ++h) {
      cost[r][h] = levenshtein_align(hyp_list[h], ref_list[r]).distance;
    }
  }

  std::vector<int> pairing = min_cost_assignment(cost);
  long long errors = 0;
  for (std::size_t r = 0; r < k; ++r) errors += cost[r][pairing[r]];
  return {errors, static_cast<long long>(ref.words.size())};
}

MetricCounts utterance_counts(const DiarizedUtterance& ref, const DiarizedUtterance& hyp,
                              int cpwer_speaker_limit) {
  MetricCounts counts;
  std::tie(counts.wer_errors, counts.wer_ref_len) = wer_counts(ref.words, hyp.words);
  std::tie(counts.wder_num, counts.wder_den) = wder_counts(ref, hyp);
  std::tie(counts.cpwer_errors, counts.cpwer_ref_len) =
      cpwer_counts(ref, hyp, cpwer_speaker_limit);
  return counts;
}

MetricCounts aggregate(std::span<const MetricCounts> counts) {
  MetricCounts total;
  for (const MetricCounts& c : counts) total += c;
  return total;
}

MetricRates rates_from(const MetricCounts& counts) {
  MetricRates rates;
  if (counts.wer_ref_len > 0) {
    rates.wer = static_cast<double>(counts.wer_errors) / counts.wer_ref_len;
  }
  if (counts.wder_den > 0) {
    rates.wder = static_cast<double>(counts.wder_num) / counts.wder_den;
  }
  if (counts.cpwer_ref_len > 0) {
    rates.cpwer = static_cast<double>(counts.cpwer_errors) / counts.cpwer_ref_len;
  }
  return rates;
}

}  // namespace diarpost
