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

#include "diarpost/llm_client.hpp"

#include <atomic>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <random>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "diarpost/jsonl.hpp"

namespace diarpost {

namespace {

using nlohmann::json;

std::string key_string(const PromptRecord& prompt) {
  return "(utterance " + prompt.utterance_id + ", segment " +
         std::to_string(prompt.segment_index) + ")";
}

// Walks a dot/index path like "choices[0].text" through a JSON document.
const json* walk_path(const json& doc, std::string_view path) {
  const json* node = &doc;
  std::size_t pos = 0;
  while (pos < path.size()) {
    std::size_t dot = path.find('.', pos);
    std::string_view part =
        path.substr(pos, dot == std::string_view::npos ? path.size() - pos : dot - pos);
    pos = dot == std::string_view::npos ? path.size() : dot + 1;

    std::size_t bracket = part.find('[');
    std::string_view name = part.substr(0, bracket);
    if (!name.empty()) {
      if (!node->is_object() || !node->contains(std::string(name))) return nullptr;
      node = &(*node)[std::string(name)];
    }
    while (bracket != std::string_view::npos) {
      std::size_t close = part.find(']', bracket);
      if (close == std::string_view::npos) return nullptr;
      std::size_t index = 0;
      for (char c : part.substr(bracket + 1, close - bracket - 1)) {
        if (c < '0' || c > '9') return nullptr;
        index = index * 10 + static_cast<std::size_t>(c - '0');
      }
      if (!node->is_array() || index >= node->size()) return nullptr;
      node = &(*node)[index];
      bracket = part.find('[', close);
    }
  }
  return node;
}

}  // namespace

BackendKind backend_kind_from_name(std::string_view name) {
  if (name == "echo") return BackendKind::kEcho;
  if (name == "replay") return BackendKind::kReplay;
  if (name == "http") return BackendKind::kHttp;
  throw DiarError(ErrorCode::kUsage, "unknown backend \"" + std::string(name) + "\"");
}

std::string EchoBackend::complete(const PromptRecord& prompt) {
  std::string_view body = prompt.prompt;
  if (!cfg_.prompt_prefix.empty() && body.starts_with(cfg_.prompt_prefix)) {
    body.remove_prefix(cfg_.prompt_prefix.size());
  }
  if (!cfg_.prompt_suffix.empty() && body.ends_with(cfg_.prompt_suffix)) {
    body.remove_suffix(cfg_.prompt_suffix.size());
  }
  return std::string(body) + cfg_.completion_suffix;
}

ReplayBackend::ReplayBackend(std::span<const CompletionRecord> records,
                             std::map<std::string, std::string> by_prompt)
    : by_prompt_(std::move(by_prompt)) {
  for (const CompletionRecord& record : records) {
    by_key_[{record.utterance_id, record.segment_index}] = record.completion;
  }
}

std::unique_ptr<ReplayBackend> ReplayBackend::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw DiarError(ErrorCode::kUsage, "cannot open replay file " + path);
  }
  std::vector<CompletionRecord> records;
  std::map<std::string, std::string> by_prompt;
  for_each_jsonl_line(in, [&](json& record, std::size_t line) {
    CompletionRecord completion = completion_record_from(record, line);
    if (record.contains("prompt") && record["prompt"].is_string()) {
      by_prompt[record["prompt"].get<std::string>()] = completion.completion;
    }
    records.push_back(std::move(completion));
  });
  return std::make_unique<ReplayBackend>(records, std::move(by_prompt));
}

std::string ReplayBackend::complete(const PromptRecord& prompt) {
  auto by_key = by_key_.find({prompt.utterance_id, prompt.segment_index});
  if (by_key != by_key_.end()) return by_key->second;
  auto by_prompt = by_prompt_.find(prompt.prompt);
  if (by_prompt != by_prompt_.end()) return by_prompt->second;
  throw DiarError(ErrorCode::kMissingReplayKey,
                  "replay map has no completion for " + key_string(prompt));
}

HttpBackend::HttpBackend(BackendConfig cfg) : cfg_(std::move(cfg)) {
  if (cfg_.endpoint_url.empty()) {
    throw DiarError(ErrorCode::kUsage, "http backend requires an endpoint URL");
  }
  if (cfg_.max_retries < 0) {
    throw DiarError(ErrorCode::kUsage, "max_retries must be >= 0");
  }
  if (cfg_.endpoint_url.starts_with("https://")) {
    throw DiarError(ErrorCode::kUsage,
                    "https endpoints are not supported by this build; use http");
  }
  if (!cfg_.endpoint_url.starts_with("http://")) {
    throw DiarError(ErrorCode::kUsage, "endpoint URL must start with http://");
  }
  std::size_t path_start = cfg_.endpoint_url.find('/', 7);
  if (path_start == std::string::npos) {
    base_url_ = cfg_.endpoint_url;
    path_ = "/";
  } else {
    base_url_ = cfg_.endpoint_url.substr(0, path_start);
    path_ = cfg_.endpoint_url.substr(path_start);
  }
  if (!cfg_.api_key_env.empty()) {
    if (const char* key = std::getenv(cfg_.api_key_env.c_str())) api_key_ = key;
  }
}

std::string HttpBackend::complete(const PromptRecord& prompt) {
  const json body = {{"prompt", prompt.prompt}, {"max_tokens", cfg_.max_output_length}};
  const std::string payload = body.dump();

  std::mt19937_64 jitter(std::random_device{}());
  std::optional<DiarError> last_error;
  for (int attempt = 0; attempt <= cfg_.max_retries; ++attempt) {
    if (attempt > 0) {
      // Full jitter: sleep uniform in [0, base * 2^(attempt-1)], capped.
      double cap = std::min(cfg_.retry_backoff_base_s * std::pow(2.0, attempt - 1), 30.0);
      double sleep_s = std::uniform_real_distribution<double>(0.0, cap)(jitter);
      std::this_thread::sleep_for(std::chrono::duration<double>(sleep_s));
    }

    httplib::Client client(base_url_);
    client.set_connection_timeout(std::chrono::duration<double>(cfg_.request_timeout_s));
    client.set_read_timeout(std::chrono::duration<double>(cfg_.request_timeout_s));
    client.set_write_timeout(std::chrono::duration<double>(cfg_.request_timeout_s));
    httplib::Headers headers;
    if (!api_key_.empty()) headers.emplace("Authorization", "Bearer " + api_key_);

    httplib::Result result = client.Post(path_, headers, payload, "application/json");
    if (!result) {
      ErrorCode code = result.error() == httplib::Error::ConnectionTimeout ||
                               result.error() == httplib::Error::Read ||
                               result.error() == httplib::Error::Write
                           ? ErrorCode::kTimeout
                           : ErrorCode::kHttpStatus;
      last_error = DiarError(code, "request failed (" + httplib::to_string(result.error()) +
                                       ") for " + key_string(prompt));
      continue;
    }
    if (result->status < 200 || result->status >= 300) {
      last_error = DiarError(ErrorCode::kHttpStatus,
                             "HTTP " + std::to_string(result->status) + " for " +
                                 key_string(prompt));
      continue;
    }
    json response = json::parse(result->body, nullptr, false);
    if (response.is_discarded()) {
      last_error = DiarError(ErrorCode::kMalformedResponse,
                             "response is not JSON for " + key_string(prompt));
      continue;
    }
    const json* node = walk_path(response, cfg_.response_path);
    if (node == nullptr || !node->is_string()) {
      last_error = DiarError(ErrorCode::kMalformedResponse,
                             "no string at response path \"" + cfg_.response_path +
                                 "\" for " + key_string(prompt));
      continue;
    }
    return node->get<std::string>();
  }
  throw *last_error;
}

std::unique_ptr<CompletionBackend> make_backend(const BackendConfig& cfg) {
  switch (cfg.kind) {
    case BackendKind::kEcho:
      return std::make_unique<EchoBackend>(cfg);
    case BackendKind::kReplay:
      return ReplayBackend::from_file(cfg.replay_path);
    case BackendKind::kHttp:
      return std::make_unique<HttpBackend>(cfg);
  }
  throw DiarError(ErrorCode::kUsage, "unknown backend kind");
}

std::vector<CompletionRecord> complete_batch(std::span<const PromptRecord> prompts,
                                             CompletionBackend& backend, int max_in_flight,
                                             bool skip_failures,
                                             std::vector<BatchFailure>* failures) {
  const std::size_t n = prompts.size();
  std::vector<std::optional<std::string>> results(n);
  std::vector<std::optional<std::string>> errors(n);

  const int workers = std::max(1, std::min<int>(max_in_flight, static_cast<int>(n)));
  std::atomic<std::size_t> next{0};
  auto run = [&]() {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= n) break;
      try {
        results[i] = backend.complete(prompts[i]);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  if (workers == 1) {
    run();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(run);
    for (std::thread& t : pool) t.join();
  }

  std::vector<CompletionRecord> completions;
  completions.reserve(n);
  std::vector<BatchFailure> failed;
  for (std::size_t i = 0; i < n; ++i) {
    if (errors[i]) {
      failed.push_back({prompts[i].utterance_id, prompts[i].segment_index, *errors[i]});
    } else {
      completions.push_back({prompts[i].utterance_id, prompts[i].segment_index,
                             std::move(*results[i])});
    }
  }
  if (!failed.empty() && !skip_failures) {
    std::string message = std::to_string(failed.size()) + " of " + std::to_string(n) +
                          " prompts failed; first: " + failed.front().error;
    throw DiarError(ErrorCode::kBackendFailure, message);
  }
  if (failures != nullptr) *failures = std::move(failed);
  return completions;
}

}  // namespace diarpost
