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
//
// diarpost: refine speaker-diarized transcripts with an LLM over JSONL files.
//
// The pipeline is: orchestrate -> build-prompts -> complete -> finalize,
// with metrics / train-data / degrade / synth-prompt / stats on the side.
// All records stream line by line; every command exits 0 on success, 1 on
// usage errors, 2 on schema errors, 3 on backend failures, 4 on anything
// internal, and reports problems on stderr as JSON lines.

#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "diarpost/codec.hpp"
#include "diarpost/datagen.hpp"
#include "diarpost/jsonl.hpp"
#include "diarpost/llm_client.hpp"
#include "diarpost/metrics.hpp"
#include "diarpost/orchestrate.hpp"
#include "diarpost/pipeline.hpp"
#include "diarpost/postprocess.hpp"
#include "diarpost/prompt.hpp"
#include "diarpost/rng.hpp"
#include "diarpost/version.hpp"

namespace {

using diarpost::DiarError;
using nlohmann::json;

void emit_diagnostic(const std::string& error, const std::string& message) {
  std::cerr << json{{"error", error}, {"message", message}}.dump() << "\n";
}

class Input {
 public:
  explicit Input(const std::string& path) {
    if (path != "-") {
      file_.open(path);
      if (!file_) {
        throw DiarError(diarpost::ErrorCode::kUsage, "cannot open input file " + path);
      }
    }
  }
  std::istream& stream() { return file_.is_open() ? file_ : std::cin; }

 private:
  std::ifstream file_;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path != "-") {
      file_.open(path);
      if (!file_) {
        throw DiarError(diarpost::ErrorCode::kUsage, "cannot open output file " + path);
      }
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw DiarError(diarpost::ErrorCode::kUsage, "cannot open file " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Shared prompt-framing flags.
struct PromptFlags {
  std::size_t max_len = 6000;
  std::string len_unit = "characters";
  std::string prefix_preset;
  std::string prefix_file;
  std::string prompt_suffix = " --> ";
  std::string completion_suffix = " [eod]";

  void attach(CLI::App* cmd, bool with_completion_suffix) {
    cmd->add_option("--max-len", max_len, "Prompt budget (default 6000)");
    cmd->add_option("--len-unit", len_unit, "Budget unit: characters|words")
        ->check(CLI::IsMember({"characters", "words"}));
    cmd->add_option("--prefix-preset", prefix_preset,
                    "Instruction preset: zero-shot|one-shot")
        ->check(CLI::IsMember({"zero-shot", "one-shot"}));
    cmd->add_option("--prefix-file", prefix_file, "File with a custom prompt prefix")
        ->excludes("--prefix-preset");
    cmd->add_option("--prompt-suffix", prompt_suffix, "Prompt terminator (default \" --> \")");
    if (with_completion_suffix) {
      cmd->add_option("--completion-suffix", completion_suffix,
                      "Completion terminator (default \" [eod]\")");
    }
  }

  diarpost::PromptConfig config() const {
    diarpost::PromptConfig cfg;
    cfg.max_measure = max_len;
    cfg.measure_unit = len_unit == "words" ? diarpost::MeasureUnit::kWhitespaceWords
                                           : diarpost::MeasureUnit::kCharacters;
    if (!prefix_preset.empty()) {
      cfg.prompt_prefix = prefix_preset == "zero-shot"
                              ? std::string(diarpost::zero_shot_prefix())
                              : std::string(diarpost::one_shot_prefix());
    } else if (!prefix_file.empty()) {
      cfg.prompt_prefix = read_file(prefix_file);
    }
    cfg.prompt_suffix = prompt_suffix;
    cfg.completion_suffix = completion_suffix;
    return cfg;
  }
};

struct DegradeFlags {
  diarpost::DegradationParams params;

  void attach(CLI::App* cmd) {
    cmd->add_option("--seed", params.seed, "Base RNG seed (default 0)");
    cmd->add_option("--flip-len-max", params.flip_len_max,
                    "Longest turn eligible for a whole flip (default 5)");
    cmd->add_option("--flip-prob", params.flip_prob, "Whole-turn flip probability (default 0.05)");
    cmd->add_option("--begin-bleed-prob", params.begin_bleed_prob,
                    "Probability of bleeding the previous speaker into a turn start");
    cmd->add_option("--end-bleed-prob", params.end_bleed_prob,
                    "Probability of bleeding the previous speaker into a turn end");
    cmd->add_option("--mid-insert-max", params.mid_insert_max,
                    "Max random interruption segments per turn (default 2)");
    cmd->add_option("--span-len-max", params.span_len_max,
                    "Hard cap on one replaced span (default 8)");
    cmd->add_option("--span-len-ratio", params.span_len_ratio,
                    "Span cap as a fraction of turn length (default 0.1)");
    cmd->add_option("--total-ratio", params.total_ratio,
                    "Per-turn replacement budget fraction (default 0.2)");
  }

  diarpost::DegradationParams for_utterance(const std::string& utterance_id) const {
    diarpost::DegradationParams derived = params;
    derived.seed = diarpost::derive_seed(params.seed, utterance_id);
    return derived;
  }
};

// ---------------------------------------------------------------------------

struct OrchestrateArgs {
  std::string input, output;
  bool sanitize = false;
};

int run_orchestrate(const OrchestrateArgs& args) {
  Input in(args.input);
  Output out(args.output);
  diarpost::for_each_jsonl_line(in.stream(), [&](json& record, std::size_t line) {
    diarpost::OrchestrationInput input = diarpost::orchestration_input(record, line);
    diarpost::DiarizedUtterance u =
        diarpost::orchestrate(input, record.value("utterance_id", ""));
    if (args.sanitize) u = diarpost::sanitize_utterance(std::move(u));
    if (auto issue = diarpost::validate_utterance(u)) {
      throw DiarError(issue->code, "line " + std::to_string(line) + ": " + issue->message);
    }
    diarpost::set_hyp(record, u);
    diarpost::write_jsonl_line(out.stream(), record);
  });
  return 0;
}

struct BuildPromptsArgs {
  std::string input, output;
  PromptFlags prompt;
  bool sanitize = false;
};

int run_build_prompts(const BuildPromptsArgs& args) {
  diarpost::PromptConfig cfg = args.prompt.config();
  Input in(args.input);
  Output out(args.output);
  diarpost::for_each_jsonl_line(in.stream(), [&](json& record, std::size_t line) {
    diarpost::DiarizedUtterance u = diarpost::hyp_utterance(record, line, args.sanitize);
    for (const diarpost::PromptRecord& prompt : diarpost::build_prompts(u, cfg)) {
      diarpost::write_jsonl_line(out.stream(), diarpost::to_json(prompt));
    }
  });
  return 0;
}

struct CompleteArgs {
  std::string prompts, output;
  std::string backend = "echo";
  std::string endpoint;
  std::string replay_file;
  std::string api_key_env;
  std::string response_path = "completion";
  int concurrency = 4;
  double timeout_s = 60.0;
  int max_retries = 2;
  double retry_backoff_s = 0.25;
  int max_output_length = 4096;
  bool skip_failures = false;
  std::string error_sidecar;
  PromptFlags prompt;
};

int run_complete(const CompleteArgs& args) {
  diarpost::BackendConfig cfg;
  cfg.kind = diarpost::backend_kind_from_name(args.backend);
  cfg.endpoint_url = args.endpoint;
  cfg.replay_path = args.replay_file;
  cfg.api_key_env = args.api_key_env;
  cfg.response_path = args.response_path;
  cfg.max_in_flight = args.concurrency;
  cfg.request_timeout_s = args.timeout_s;
  cfg.max_retries = args.max_retries;
  cfg.retry_backoff_base_s = args.retry_backoff_s;
  cfg.max_output_length = args.max_output_length;
  diarpost::PromptConfig prompt_cfg = args.prompt.config();
  cfg.prompt_prefix = prompt_cfg.prompt_prefix;
  cfg.prompt_suffix = prompt_cfg.prompt_suffix;
  cfg.completion_suffix = prompt_cfg.completion_suffix;

  std::vector<diarpost::PromptRecord> prompts;
  {
    Input in(args.prompts);
    diarpost::for_each_jsonl_line(in.stream(), [&](json& record, std::size_t line) {
      prompts.push_back(diarpost::prompt_record_from(record, line));
    });
  }

  std::unique_ptr<diarpost::CompletionBackend> backend = diarpost::make_backend(cfg);
  std::vector<diarpost::BatchFailure> failures;
  std::vector<diarpost::CompletionRecord> completions = diarpost::complete_batch(
      prompts, *backend, cfg.max_in_flight, args.skip_failures, &failures);

  Output out(args.output);
  for (const diarpost::CompletionRecord& completion : completions) {
    diarpost::write_jsonl_line(out.stream(), diarpost::to_json(completion));
  }
  if (!failures.empty()) {
    std::string sidecar_path =
        args.error_sidecar.empty() ? args.output + ".errors.jsonl" : args.error_sidecar;
    Output sidecar(sidecar_path);
    for (const diarpost::BatchFailure& failure : failures) {
      diarpost::write_jsonl_line(sidecar.stream(),
                                 json{{"utterance_id", failure.utterance_id},
                                      {"segment_index", failure.segment_index},
                                      {"error", failure.error}});
    }
    emit_diagnostic("BackendFailure",
                    std::to_string(failures.size()) + " prompts failed; see " + sidecar_path);
  }
  return 0;
}

struct FinalizeArgs {
  std::string input_utterances, completions, output;
  std::string completion_suffix = " [eod]";
  bool sanitize = false;
  bool sanitize_completions = true;
};

int run_finalize(const FinalizeArgs& args) {
  std::map<std::string, std::vector<diarpost::CompletionRecord>> by_utterance;
  {
    Input in(args.completions);
    diarpost::for_each_jsonl_line(in.stream(), [&](json& record, std::size_t line) {
      diarpost::CompletionRecord completion = diarpost::completion_record_from(record, line);
      by_utterance[completion.utterance_id].push_back(std::move(completion));
    });
  }

  Input in(args.input_utterances);
  Output out(args.output);
  std::set<std::string> consumed;
  diarpost::for_each_jsonl_line(in.stream(), [&](json& record, std::size_t line) {
    diarpost::DiarizedUtterance original =
        diarpost::hyp_utterance(record, line, args.sanitize);
    auto completions = by_utterance.find(original.utterance_id);
    diarpost::DiarizedUtterance refined =
        completions == by_utterance.end()
            ? original
            : diarpost::finalize(original, completions->second, args.completion_suffix,
                                 args.sanitize_completions);
    if (completions != by_utterance.end()) consumed.insert(original.utterance_id);
    diarpost::set_hyp(record, refined);
    diarpost::write_jsonl_line(out.stream(), record);
  });

  if (consumed.size() != by_utterance.size()) {
    std::string orphans;
    for (const auto& [utterance_id, completions] : by_utterance) {
      if (!consumed.count(utterance_id)) {
        if (!orphans.empty()) orphans += ", ";
        orphans += utterance_id;
      }
    }
    throw DiarError(diarpost::ErrorCode::kOrphanCompletion,
                    "completions reference unknown utterances: " + orphans);
  }
  return 0;
}

struct MetricsArgs {
  std::string input;
  std::string output_report = "-";
  int cpwer_limit = diarpost::kDefaultCpwerSpeakerLimit;
  bool sanitize = false;
};

int run_metrics(const MetricsArgs& args) {
  Input in(args.input);
  json per_utterance = json::array();
  std::vector<diarpost::MetricCounts> counts;
  std::vector<json> record_errors;
  diarpost::for_each_jsonl_line(in.stream(), [&](json& record, std::size_t line) {
    if (!diarpost::has_ref(record)) {
      record_errors.push_back(json{{"error", "SchemaError"},
                                   {"message", "missing ref_text/ref_spk"},
                                   {"utterance_id", record.value("utterance_id", "")},
                                   {"line", line}});
      return;
    }
    diarpost::DiarizedUtterance hyp = diarpost::hyp_utterance(record, line, args.sanitize);
    diarpost::DiarizedUtterance ref = diarpost::ref_utterance(record, line, args.sanitize);
    diarpost::MetricCounts c = diarpost::utterance_counts(ref, hyp, args.cpwer_limit);
    counts.push_back(c);
    per_utterance.push_back(json{{"utterance_id", hyp.utterance_id},
                                 {"wer_errors", c.wer_errors},
                                 {"wer_ref_len", c.wer_ref_len},
                                 {"wder_num", c.wder_num},
                                 {"wder_den", c.wder_den},
                                 {"cpwer_errors", c.cpwer_errors},
                                 {"cpwer_ref_len", c.cpwer_ref_len}});
  });
  if (!record_errors.empty()) {
    for (const json& error : record_errors) std::cerr << error.dump() << "\n";
    throw DiarError(diarpost::ErrorCode::kSchema,
                    std::to_string(record_errors.size()) + " records lack references");
  }

  diarpost::MetricCounts total = diarpost::aggregate(counts);
  diarpost::MetricRates rates = diarpost::rates_from(total);
  json report = {
      {"wer", rates.wer ? json(*rates.wer) : json(nullptr)},
      {"wder", rates.wder ? json(*rates.wder) : json(nullptr)},
      {"cpwer", rates.cpwer ? json(*rates.cpwer) : json(nullptr)},
      {"utterances", counts.size()},
      {"counts",
       {{"wer_errors", total.wer_errors},
        {"wer_ref_len", total.wer_ref_len},
        {"wder_num", total.wder_num},
        {"wder_den", total.wder_den},
        {"cpwer_errors", total.cpwer_errors},
        {"cpwer_ref_len", total.cpwer_ref_len}}},
      {"per_utterance", per_utterance},
  };
  Output out(args.output_report);
  out.stream() << report.dump(2) << "\n";
  return 0;
}

struct TrainDataArgs {
  std::string input, output;
  std::string flavor = "mixed";
  bool degrade = false;
  bool sanitize = false;
  PromptFlags prompt;
  DegradeFlags degradation;
};

int run_train_data(const TrainDataArgs& args) {
  diarpost::Flavor flavor = diarpost::flavor_from_name(args.flavor);
  diarpost::PromptConfig cfg = args.prompt.config();
  Input in(args.input);
  Output out(args.output);
  diarpost::for_each_jsonl_line(in.stream(), [&](json& record, std::size_t line) {
    diarpost::DiarizedUtterance ref = diarpost::ref_utterance(record, line, args.sanitize);
    diarpost::DiarizedUtterance hyp;
    if (args.degrade) {
      hyp = ref;
      hyp.speakers = diarpost::degrade_speakers(
          ref.speakers, args.degradation.for_utterance(ref.utterance_id));
    } else {
      if (!diarpost::has_hyp(record)) {
        throw DiarError(diarpost::ErrorCode::kSchema,
                        "line " + std::to_string(line) +
                            ": hyp_text/hyp_spk required unless --degrade is given");
      }
      hyp = diarpost::hyp_utterance(record, line, args.sanitize);
    }

    std::vector<diarpost::TrainingPair> pairs;
    switch (flavor) {
      case diarpost::Flavor::kHyp2Ora:
        pairs = diarpost::build_hyp2ora(hyp, ref, cfg);
        break;
      case diarpost::Flavor::kDeg2Ref:
        pairs = diarpost::build_deg2ref(hyp, ref, cfg);
        break;
      case diarpost::Flavor::kMixed:
        pairs = diarpost::build_mixed(diarpost::build_hyp2ora(hyp, ref, cfg),
                                      diarpost::build_deg2ref(hyp, ref, cfg));
        break;
    }
    for (const diarpost::TrainingPair& pair : pairs) {
      diarpost::write_jsonl_line(out.stream(), diarpost::to_json(pair));
    }
  });
  return 0;
}

struct DegradeArgs {
  std::string input, output;
  bool sanitize = false;
  DegradeFlags degradation;
};

int run_degrade(const DegradeArgs& args) {
  Input in(args.input);
  Output out(args.output);
  diarpost::for_each_jsonl_line(in.stream(), [&](json& record, std::size_t line) {
    // Degrade the reference when present (simulating a hypothesis), else
    // corrupt the hypothesis labels in place.
    diarpost::DiarizedUtterance source =
        diarpost::has_ref(record) ? diarpost::ref_utterance(record, line, args.sanitize)
                                  : diarpost::hyp_utterance(record, line, args.sanitize);
    diarpost::DiarizedUtterance degraded = source;
    degraded.speakers = diarpost::degrade_speakers(
        source.speakers, args.degradation.for_utterance(source.utterance_id));
    diarpost::set_hyp(record, degraded);
    diarpost::write_jsonl_line(out.stream(), record);
  });
  return 0;
}

struct SynthPromptArgs {
  std::string topic, scene;
  int num_speakers = 2;
  int num_words = 500;
  bool sample = false;
  std::uint64_t seed = 0;
  std::string example_file;
  std::string output = "-";
  bool lenient = false;
};

int run_synth_prompt(const SynthPromptArgs& args) {
  diarpost::SynthesisSpec spec;
  if (args.sample) {
    spec = diarpost::sample_synthesis_spec(args.seed);
  } else {
    if (args.topic.empty() || args.scene.empty()) {
      throw DiarError(diarpost::ErrorCode::kUsage,
                      "--topic and --scene are required unless --sample is given");
    }
    spec.topic = args.topic;
    spec.scene = args.scene;
    spec.num_speakers = args.num_speakers;
    spec.num_words = args.num_words;
    if (spec.num_speakers < 2 || spec.num_speakers > 7) {
      throw DiarError(diarpost::ErrorCode::kUsage, "--nspk must be in [2, 7]");
    }
    if (spec.num_words < 100 || spec.num_words > 2000) {
      throw DiarError(diarpost::ErrorCode::kUsage, "--nwords must be in [100, 2000]");
    }
  }
  std::string example =
      args.example_file.empty() ? std::string() : read_file(args.example_file);
  Output out(args.output);
  out.stream() << diarpost::build_synthesis_prompt(spec, example, !args.lenient);
  return 0;
}

struct StatsArgs {
  std::string input;
  std::string output = "-";
};

int run_stats(const StatsArgs& args) {
  Input in(args.input);
  std::map<std::size_t, std::size_t> histogram;
  diarpost::for_each_jsonl_line(in.stream(), [&](json& record, std::size_t line) {
    diarpost::DiarizedUtterance u = diarpost::hyp_utterance(record, line);
    std::set<diarpost::SpeakerId> speakers(u.speakers.begin(), u.speakers.end());
    ++histogram[speakers.size()];
  });
  json out_json = json::object();
  for (const auto& [speakers, utterances] : histogram) {
    out_json[std::to_string(speakers)] = utterances;
  }
  Output out(args.output);
  out.stream() << out_json.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Speaker-diarization post-processing over JSONL files"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("diarpost ") + diarpost::kVersion +
                                        " (schema " +
                                        std::to_string(diarpost::kSchemaVersion) + ")");

  OrchestrateArgs orchestrate_args;
  CLI::App* orchestrate =
      app.add_subcommand("orchestrate", "Assign a speaker to each timed word");
  orchestrate->add_option("--input", orchestrate_args.input, "UtteranceRecord JSONL")
      ->required();
  orchestrate->add_option("--output", orchestrate_args.output, "Output JSONL")->required();
  orchestrate->add_flag("--sanitize", orchestrate_args.sanitize,
                        "Replace reserved \"<spk:\" substrings in words");

  BuildPromptsArgs build_prompts_args;
  CLI::App* build_prompts =
      app.add_subcommand("build-prompts", "Render budget-fitted prompts per utterance");
  build_prompts->add_option("--input", build_prompts_args.input, "UtteranceRecord JSONL")
      ->required();
  build_prompts->add_option("--output", build_prompts_args.output, "PromptRecord JSONL")
      ->required();
  build_prompts->add_flag("--sanitize", build_prompts_args.sanitize,
                          "Replace reserved \"<spk:\" substrings in words");
  build_prompts_args.prompt.attach(build_prompts, /*with_completion_suffix=*/false);

  CompleteArgs complete_args;
  CLI::App* complete = app.add_subcommand("complete", "Run prompts through a backend");
  complete->add_option("--prompts", complete_args.prompts, "PromptRecord JSONL")->required();
  complete->add_option("--output", complete_args.output, "CompletionRecord JSONL")->required();
  complete->add_option("--backend", complete_args.backend, "echo|replay|http")
      ->check(CLI::IsMember({"echo", "replay", "http"}));
  complete->add_option("--endpoint", complete_args.endpoint, "http backend URL");
  complete->add_option("--replay-file", complete_args.replay_file,
                       "CompletionRecord JSONL for the replay backend");
  complete->add_option("--api-key-env", complete_args.api_key_env,
                       "Environment variable holding the bearer token");
  complete->add_option("--response-path", complete_args.response_path,
                       "JSON path of the completion text (default \"completion\")");
  complete->add_option("--concurrency", complete_args.concurrency,
                       "Max in-flight requests (default 4)");
  complete->add_option("--timeout", complete_args.timeout_s, "Request timeout in seconds");
  complete->add_option("--max-retries", complete_args.max_retries, "Retries per prompt");
  complete->add_option("--retry-backoff", complete_args.retry_backoff_s,
                       "Base backoff in seconds");
  complete->add_option("--max-output-length", complete_args.max_output_length,
                       "max_tokens to request");
  complete->add_flag("--skip-failures", complete_args.skip_failures,
                     "Continue past failed prompts, writing an error sidecar");
  complete->add_option("--error-sidecar", complete_args.error_sidecar,
                       "Failure sidecar path (default <output>.errors.jsonl)");
  complete_args.prompt.attach(complete, /*with_completion_suffix=*/true);

  FinalizeArgs finalize_args;
  CLI::App* finalize =
      app.add_subcommand("finalize", "Transfer completion speakers onto the original words");
  finalize->add_option("--input-utterances", finalize_args.input_utterances,
                       "UtteranceRecord JSONL fed to build-prompts")
      ->required();
  finalize->add_option("--completions", finalize_args.completions, "CompletionRecord JSONL")
      ->required();
  finalize->add_option("--output", finalize_args.output, "Refined UtteranceRecord JSONL")
      ->required();
  finalize->add_option("--completion-suffix", finalize_args.completion_suffix,
                       "Completion terminator to truncate at");
  finalize->add_flag("--sanitize", finalize_args.sanitize,
                     "Replace reserved \"<spk:\" substrings in input words");
  finalize->add_flag("--sanitize-completions,!--no-sanitize-completions",
                     finalize_args.sanitize_completions,
                     "Defuse malformed speaker tokens in completions (default on)");

  MetricsArgs metrics_args;
  CLI::App* metrics = app.add_subcommand("metrics", "Score hypotheses against references");
  metrics->add_option("--input", metrics_args.input, "UtteranceRecord JSONL with refs")
      ->required();
  metrics->add_option("--output-report", metrics_args.output_report,
                      "Report JSON path (default stdout)");
  metrics->add_option("--cpwer-limit", metrics_args.cpwer_limit,
                      "Max speakers per side for cpWER stream matching (default 8)");
  metrics->add_flag("--sanitize", metrics_args.sanitize,
                    "Replace reserved \"<spk:\" substrings in words");

  TrainDataArgs train_data_args;
  CLI::App* train_data =
      app.add_subcommand("train-data", "Build prompt/completion finetuning pairs");
  train_data->add_option("--input", train_data_args.input, "UtteranceRecord JSONL")->required();
  train_data->add_option("--output", train_data_args.output, "Training-pair JSONL")->required();
  train_data->add_option("--flavor", train_data_args.flavor, "hyp2ora|deg2ref|mixed")
      ->required()
      ->check(CLI::IsMember({"hyp2ora", "deg2ref", "mixed"}));
  train_data->add_flag("--degrade", train_data_args.degrade,
                       "Synthesize the hypothesis by degrading reference speakers");
  train_data->add_flag("--sanitize", train_data_args.sanitize,
                       "Replace reserved \"<spk:\" substrings in words");
  train_data_args.prompt.attach(train_data, /*with_completion_suffix=*/true);
  train_data_args.degradation.attach(train_data);

  DegradeArgs degrade_args;
  CLI::App* degrade = app.add_subcommand("degrade", "Randomly corrupt speaker labels");
  degrade->add_option("--input", degrade_args.input, "UtteranceRecord JSONL")->required();
  degrade->add_option("--output", degrade_args.output, "Output JSONL")->required();
  degrade->add_flag("--sanitize", degrade_args.sanitize,
                    "Replace reserved \"<spk:\" substrings in words");
  degrade_args.degradation.attach(degrade);

  SynthPromptArgs synth_args;
  CLI::App* synth =
      app.add_subcommand("synth-prompt", "Emit a conversation-synthesis prompt");
  synth->add_option("--topic", synth_args.topic, "Conversation topic");
  synth->add_option("--scene", synth_args.scene, "Conversation scene");
  synth->add_option("--nspk", synth_args.num_speakers, "Number of speakers in [2,7]");
  synth->add_option("--nwords", synth_args.num_words, "Target word count in [100,2000]");
  synth->add_flag("--sample", synth_args.sample, "Sample topic/scene/speakers/words from --seed");
  synth->add_option("--seed", synth_args.seed, "Seed for --sample");
  synth->add_option("--example-file", synth_args.example_file,
                    "File with the example conversation to embed");
  synth->add_option("--output", synth_args.output, "Output path (default stdout)");
  synth->add_flag("--lenient", synth_args.lenient, "Allow topics/scenes outside the catalogs");

  StatsArgs stats_args;
  CLI::App* stats = app.add_subcommand("stats", "Histogram of hypothesis speaker counts");
  stats->add_option("--input", stats_args.input, "UtteranceRecord JSONL")->required();
  stats->add_option("--output", stats_args.output, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*orchestrate) return run_orchestrate(orchestrate_args);
    if (*build_prompts) return run_build_prompts(build_prompts_args);
    if (*complete) return run_complete(complete_args);
    if (*finalize) return run_finalize(finalize_args);
    if (*metrics) return run_metrics(metrics_args);
    if (*train_data) return run_train_data(train_data_args);
    if (*degrade) return run_degrade(degrade_args);
    if (*synth) return run_synth_prompt(synth_args);
    if (*stats) return run_stats(stats_args);
  } catch (const DiarError& e) {
    emit_diagnostic(diarpost::error_code_name(e.code()), e.what());
    return static_cast<int>(diarpost::error_category(e.code()));
  } catch (const std::exception& e) {
    emit_diagnostic("InternalError", e.what());
    return 4;
  }
  return 1;
}
