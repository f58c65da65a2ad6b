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

#ifndef DIARPOST_LLM_CLIENT_HPP_
#define DIARPOST_LLM_CLIENT_HPP_

#include <map>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "diarpost/postprocess.hpp"
#include "diarpost/prompt.hpp"
#include "diarpost/types.hpp"

namespace diarpost {

enum class BackendKind { kEcho, kReplay, kHttp };

BackendKind backend_kind_from_name(std::string_view name);

// Configuration for the pluggable completion backends.
//
// http:   POST {"prompt": <str>, "max_tokens": <int>} to endpoint_url and
//         read the completion string at `response_path` (dot/index path,
//         e.g. "completion" or "choices[0].text"). The API key is read from
//         the environment variable named by api_key_env and sent as a bearer
//         token. Timeouts, HTTP errors and malformed responses are retried
//         with exponential backoff and full jitter.
// replay: look up completions in a CompletionRecord JSONL file, first by
//         (utterance_id, segment_index), then by exact prompt text when the
//         record carries a "prompt" field. Missing keys are not retried.
// echo:   return the prompt body with prompt_prefix/prompt_suffix stripped
//         and completion_suffix appended. Useful as a pipeline no-op.
struct BackendConfig {
  BackendKind kind = BackendKind::kEcho;
  std::string endpoint_url;
  std::string api_key_env;
  int max_in_flight = 4;
  double request_timeout_s = 60.0;
  int max_retries = 2;
  double retry_backoff_base_s = 0.25;
  int max_output_length = 4096;
  std::string response_path = "completion";
  std::string replay_path;
  // Prompt framing, used by the echo backend.
  std::string prompt_prefix;
  std::string prompt_suffix = " --> ";
  std::string completion_suffix = " [eod]";
};

class CompletionBackend {
 public:
  virtual ~CompletionBackend() = default;

  // Returns the raw completion text for one prompt. Implementations do their
  // own retrying; a thrown DiarError is final. Must be safe to call from
  // multiple threads.
  virtual std::string complete(const PromptRecord& prompt) = 0;

  std::string complete_text(const std::string& prompt) {
    PromptRecord record;
    record.prompt = prompt;
    return complete(record);
  }
};

class EchoBackend final : public CompletionBackend {
 public:
  explicit EchoBackend(BackendConfig cfg) : cfg_(std::move(cfg)) {}
  std::string complete(const PromptRecord& prompt) override;

 private:
  BackendConfig cfg_;
};

class ReplayBackend final : public CompletionBackend {
 public:
  // Records may carry an extra "prompt" field to enable prompt-text lookup.
  explicit ReplayBackend(std::span<const CompletionRecord> records,
                         std::map<std::string, std::string> by_prompt = {});
  static std::unique_ptr<ReplayBackend> from_file(const std::string& path);

  std::string complete(const PromptRecord& prompt) override;

 private:
  std::map<std::pair<std::string, int>, std::string> by_key_;
  std::map<std::string, std::string> by_prompt_;
};

class HttpBackend final : public CompletionBackend {
 public:
  explicit HttpBackend(BackendConfig cfg);
  std::string complete(const PromptRecord& prompt) override;

 private:
  BackendConfig cfg_;
  std::string base_url_;
  std::string path_;
  std::string api_key_;
};

std::unique_ptr<CompletionBackend> make_backend(const BackendConfig& cfg);

struct BatchFailure {
  std::string utterance_id;
  int segment_index = 0;
  std::string error;
};

// Runs the prompts with at most `max_in_flight` concurrent requests. Output
// order follows input order regardless of completion timing. By default any
// per-prompt failure fails the whole batch; with skip_failures=true the
// failures are reported through `failures` and the rest is returned.
std::vector<CompletionRecord> complete_batch(std::span<const PromptRecord> prompts,
                                             CompletionBackend& backend, int max_in_flight,
                                             bool skip_failures = false,
                                             std::vector<BatchFailure>* failures = nullptr);

}  // namespace diarpost

#endif  // DIARPOST_LLM_CLIENT_HPP_
