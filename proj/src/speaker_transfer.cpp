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

#include "diarpost/speaker_transfer.hpp"

#include <algorithm>

namespace diarpost {

Alignment levenshtein_align(std::span<const std::string> src,
                            std::span<const std::string> tgt) {
  const std::size_t n = src.size();
  const std::size_t m = tgt.size();

  // dp[i][j] = edit distance between src[0..i) and tgt[0..j), flattened.
  std::vector<int> dp((n + 1) * (m + 1));
  auto at = [m](std::size_t i, std::size_t j) -> std::size_t { return i * (m + 1) + j; };
  for (std::size_t i = 0; i <= n; ++i) dp[at(i, 0)] = static_cast<int>(i);
  for (std::size_t j = 0; j <= m; ++j) dp[at(0, j)] = static_cast<int>(j);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      int diag = dp[at(i - 1, j - 1)] + (src[i - 1] == tgt[j - 1] ? 0 : 1);
      int del = dp[at(i - 1, j)] + 1;
      int ins = dp[at(i, j - 1)] + 1;
      dp[at(i, j)] = std::min({diag, del, ins});
    }
  }

  Alignment result;
  result.distance = dp[at(n, m)];
  result.ops.reserve(std::max(n, m));
  std::size_t i = n, j = m;
  while (i > 0 || j > 0) {
    int here = dp[at(i, j)];
    if (i > 0 && j > 0) {
      bool match = src[i - 1] == tgt[j - 1];
      if (here == dp[at(i - 1, j - 1)] + (match ? 0 : 1)) {
        result.ops.push_back({match ? EditKind::kMatch : EditKind::kSubstitute, i - 1, j - 1});
        --i;
        --j;
        continue;
      }
    }
    if (i > 0 && here == dp[at(i - 1, j)] + 1) {
      result.ops.push_back({EditKind::kDelete, i - 1, kNoIndex});
      --i;
      continue;
    }
    result.ops.push_back({EditKind::kInsert, kNoIndex, j - 1});
    --j;
  }
  std::reverse(result.ops.begin(), result.ops.end());
  return result;
}

std::vector<SpeakerId> project_speakers(const Alignment& alignment,
                                        std::span<const SpeakerId> src_speakers,
                                        std::size_t tgt_len) {
  std::vector<SpeakerId> aligned(tgt_len, kBlankSpeaker);
  for (const EditOp& op : alignment.ops) {
    if (op.kind == EditKind::kMatch || op.kind == EditKind::kSubstitute) {
      aligned[op.tgt] = src_speakers[op.src];
    }
  }
  return aligned;
}

CostMatrix speaker_agreement_counts(std::span<const SpeakerId> aligned,
                                    std::span<const SpeakerId> target) {
  SpeakerId max_label = 0;
  for (SpeakerId s : aligned) max_label = std::max(max_label, s);
  for (SpeakerId s : target) max_label = std::max(max_label, s);
  const std::size_t k = static_cast<std::size_t>(max_label);
  CostMatrix counts(k, std::vector<std::int64_t>(k, 0));
  for (std::size_t m = 0; m < target.size(); ++m) {
    if (aligned[m] != kBlankSpeaker) {
      ++counts[aligned[m] - 1][target[m] - 1];
    }
  }
  return counts;
}

std::vector<SpeakerId> transfer_speakers(std::span<const std::string> src_words,
                                         std::span<const SpeakerId> src_speakers,
                                         std::span<const std::string> tgt_words,
                                         std::span<const SpeakerId> tgt_speakers) {
  if (tgt_words.empty()) return {};

  Alignment alignment = levenshtein_align(src_words, tgt_words);
  std::vector<SpeakerId> aligned = project_speakers(alignment, src_speakers, tgt_words.size());

  CostMatrix counts = speaker_agreement_counts(aligned, tgt_speakers);
  std::vector<int> mapping = max_agreement_assignment(counts);

  std::vector<SpeakerId> transferred(tgt_words.size());
  for (std::size_t m = 0; m < tgt_words.size(); ++m) {
    if (aligned[m] != kBlankSpeaker) {
      transferred[m] = static_cast<SpeakerId>(mapping[aligned[m] - 1] + 1);
    } else {
      transferred[m] = tgt_speakers[m];
    }
  }
  return transferred;
}

}  // namespace diarpost
