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

#include "diarpost/pipeline.hpp"

namespace diarpost {

std::pair<DiarizedUtterance, PipelineReport> postprocess(const DiarizedUtterance& u,
                                                         const PromptConfig& cfg,
                                                         CompletionBackend& backend,
                                                         int max_in_flight,
                                                         bool tolerate_failures) {
  check_utterance(u);
  PipelineReport report;
  std::vector<PromptRecord> prompts = build_prompts(u, cfg);
  report.segments_emitted = prompts.size();

  std::vector<CompletionRecord> completions;
  try {
    completions = complete_batch(prompts, backend, max_in_flight);
  } catch (const DiarError& e) {
    if (!tolerate_failures) throw;
    report.errors.push_back(e.what());
    return {u, report};
  }
  report.completions_received = completions.size();

  DiarizedUtterance out = finalize(u, std::move(completions), cfg.completion_suffix);
  for (std::size_t i = 0; i < u.speakers.size(); ++i) {
    if (u.speakers[i] != out.speakers[i]) ++report.speakers_changed;
  }
  return {std::move(out), report};
}

std::pair<DiarizedUtterance, PipelineReport> postprocess(const DiarizedUtterance& u,
                                                         const PromptConfig& cfg,
                                                         const BackendConfig& backend_cfg,
                                                         bool tolerate_failures) {
  std::unique_ptr<CompletionBackend> backend = make_backend(backend_cfg);
  return postprocess(u, cfg, *backend, backend_cfg.max_in_flight, tolerate_failures);
}

}  // namespace diarpost
