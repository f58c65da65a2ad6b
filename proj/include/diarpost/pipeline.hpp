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

#ifndef DIARPOST_PIPELINE_HPP_
#define DIARPOST_PIPELINE_HPP_

#include <string>
#include <utility>
#include <vector>

#include "diarpost/llm_client.hpp"
#include "diarpost/postprocess.hpp"
#include "diarpost/prompt.hpp"
#include "diarpost/types.hpp"

namespace diarpost {

struct PipelineReport {
  std::size_t segments_emitted = 0;
  std::size_t completions_received = 0;
  std::size_t speakers_changed = 0;  // Hamming distance, input vs output labels
  std::vector<std::string> errors;
};

// One-call composition: build prompts, run the backend, stitch and transfer
// the labels back. The input is never mutated; the returned utterance keeps
// the original words with refined speakers. Backend failures throw with
// segment keys; with tolerate_failures=true they are reported in the result
// and the input comes back unchanged.
std::pair<DiarizedUtterance, PipelineReport> postprocess(const DiarizedUtterance& u,
                                                         const PromptConfig& cfg,
                                                         CompletionBackend& backend,
                                                         int max_in_flight = 1,
                                                         bool tolerate_failures = false);

std::pair<DiarizedUtterance, PipelineReport> postprocess(const DiarizedUtterance& u,
                                                         const PromptConfig& cfg,
                                                         const BackendConfig& backend_cfg,
                                                         bool tolerate_failures = false);

}  // namespace diarpost

#endif  // DIARPOST_PIPELINE_HPP_
