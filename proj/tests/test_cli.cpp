// Integration tests that drive the installed CLI binary over temp files.
// The binary path arrives via the DIARPOST_CLI environment variable.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "diarpost/codec.hpp"
#include "diarpost/jsonl.hpp"
#include "fixtures.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
namespace dt = diarpost::testing;

namespace {

std::string cli_path() {
  const char* path = std::getenv("DIARPOST_CLI");
  REQUIRE_MESSAGE(path != nullptr, "DIARPOST_CLI must point at the diarpost binary");
  return path;
}

struct CommandResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr interleaved
};

CommandResult run_cli(const std::string& args) {
  std::string command = cli_path() + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CommandResult result;
  char buffer[4096];
  std::size_t n;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    result.output.append(buffer, n);
  }
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    dir_ = fs::temp_directory_path() /
           ("diarpost_cli_" + std::to_string(getpid()) + "_" + std::to_string(counter++));
    fs::create_directories(dir_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(dir_, ec);
  }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, const std::string& content) const {
    std::ofstream out(path(name));
    out << content;
    return path(name);
  }

  std::string read(const std::string& name) const {
    std::ifstream in(path(name));
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }

 private:
  fs::path dir_;
};

std::string consultation_record() {
  auto example = dt::consultation_orchestration();
  json timing = json::array();
  std::string text;
  for (const auto& chunk : example.chunks) {
    for (const std::string& word : diarpost::split_words(chunk.text)) {
      if (!text.empty()) text += ' ';
      text += word;
      timing.push_back(json::array({chunk.start, chunk.end}));
    }
  }
  json segments = json::array();
  for (const auto& segment : example.segments) {
    segments.push_back(
        {{"start", segment.start}, {"end", segment.end}, {"speaker", segment.speaker}});
  }
  json record = {{"utterance_id", "consult"},
                 {"hyp_text", text},
                 {"hyp_word_timing", timing},
                 {"hyp_spk_segments", segments}};
  return record.dump() + "\n";
}

}  // namespace

TEST_CASE("--version reports the tool and schema version") {
  CommandResult result = run_cli("--version");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("diarpost 0.1.0") != std::string::npos);
  CHECK(result.output.find("schema 1") != std::string::npos);
}

TEST_CASE("orchestrate fills hyp_spk from timings and segments") {
  TempDir tmp;
  tmp.write("in.jsonl", consultation_record());
  CommandResult result =
      run_cli("orchestrate --input " + tmp.path("in.jsonl") + " --output " + tmp.path("out.jsonl"));
  REQUIRE(result.exit_code == 0);

  json record = json::parse(tmp.read("out.jsonl"));
  auto example = dt::consultation_orchestration();
  CHECK(record["hyp_spk"] ==
        diarpost::format_speaker_list(example.expected_speakers()));
}

TEST_CASE("orchestrate on an empty file produces an empty file") {
  TempDir tmp;
  tmp.write("in.jsonl", "");
  CommandResult result =
      run_cli("orchestrate --input " + tmp.path("in.jsonl") + " --output " + tmp.path("out.jsonl"));
  CHECK(result.exit_code == 0);
  CHECK(tmp.read("out.jsonl").empty());
}

TEST_CASE("orchestrate names the missing field and line in diagnostics") {
  TempDir tmp;
  tmp.write("in.jsonl", json{{"utterance_id", "x"}, {"hyp_text", "hello"}}.dump() + "\n");
  CommandResult result =
      run_cli("orchestrate --input " + tmp.path("in.jsonl") + " --output " + tmp.path("out.jsonl"));
  CHECK(result.exit_code == 2);
  json diagnostic = json::parse(result.output.substr(0, result.output.find('\n')));
  CHECK(diagnostic["error"] == "SchemaError");
  std::string message = diagnostic["message"];
  CHECK(message.find("hyp_word_timing") != std::string::npos);
  CHECK(message.find("line 1") != std::string::npos);
}

TEST_CASE("build-prompts renders default suffix and presets") {
  TempDir tmp;
  json record = {{"utterance_id", "u"},
                 {"hyp_text", "good morning how are you"},
                 {"hyp_spk", "1 1 2 2 2"}};
  tmp.write("in.jsonl", record.dump() + "\n");

  CommandResult result = run_cli("build-prompts --input " + tmp.path("in.jsonl") +
                                 " --output " + tmp.path("prompts.jsonl"));
  REQUIRE(result.exit_code == 0);
  json prompt = json::parse(tmp.read("prompts.jsonl"));
  CHECK(prompt["prompt"] == "<spk:1> good morning <spk:2> how are you --> ");

  result = run_cli("build-prompts --input " + tmp.path("in.jsonl") + " --output " +
                   tmp.path("zs.jsonl") + " --prefix-preset zero-shot");
  REQUIRE(result.exit_code == 0);
  json zero_shot = json::parse(tmp.read("zs.jsonl"));
  CHECK(std::string(zero_shot["prompt"])
            .starts_with("In the speaker diarization transcript below"));
}

TEST_CASE("build-prompts rejects a budget smaller than one word") {
  TempDir tmp;
  json record = {{"utterance_id", "u"},
                 {"hyp_text", "supercalifragilistic"},
                 {"hyp_spk", "1"}};
  tmp.write("in.jsonl", record.dump() + "\n");
  CommandResult result = run_cli("build-prompts --input " + tmp.path("in.jsonl") +
                                 " --output " + tmp.path("out.jsonl") + " --max-len 10");
  CHECK(result.exit_code == 2);
  CHECK(result.output.find("UnsplittableSegment") != std::string::npos);
}

TEST_CASE("complete with the echo backend preserves keys") {
  TempDir tmp;
  std::string prompts;
  for (int i = 0; i < 3; ++i) {
    prompts += json{{"utterance_id", "u"},
                    {"segment_index", i},
                    {"prompt", "<spk:1> word" + std::to_string(i) + " --> "},
                    {"word_begin", i},
                    {"word_end", i + 1}}
                   .dump() +
               "\n";
  }
  tmp.write("prompts.jsonl", prompts);
  CommandResult result = run_cli("complete --prompts " + tmp.path("prompts.jsonl") +
                                 " --output " + tmp.path("comp.jsonl") + " --backend echo");
  REQUIRE(result.exit_code == 0);

  std::istringstream lines(tmp.read("comp.jsonl"));
  std::string line;
  int index = 0;
  while (std::getline(lines, line)) {
    json completion = json::parse(line);
    CHECK(completion["segment_index"] == index);
    CHECK(completion["completion"] ==
          "<spk:1> word" + std::to_string(index) + " [eod]");
    ++index;
  }
  CHECK(index == 3);
}

TEST_CASE("complete with replay skips failures into a sidecar when asked") {
  TempDir tmp;
  tmp.write("prompts.jsonl",
            json{{"utterance_id", "u"}, {"segment_index", 0}, {"prompt", "a"}}.dump() + "\n" +
                json{{"utterance_id", "v"}, {"segment_index", 0}, {"prompt", "b"}}.dump() +
                "\n");
  tmp.write("replay.jsonl",
            json{{"utterance_id", "u"}, {"segment_index", 0}, {"completion", "ok"}}.dump() +
                "\n");

  // Without --skip-failures the whole batch fails.
  CommandResult strict = run_cli("complete --prompts " + tmp.path("prompts.jsonl") +
                                 " --output " + tmp.path("c.jsonl") +
                                 " --backend replay --replay-file " + tmp.path("replay.jsonl"));
  CHECK(strict.exit_code == 3);

  CommandResult lenient = run_cli(
      "complete --prompts " + tmp.path("prompts.jsonl") + " --output " + tmp.path("c.jsonl") +
      " --backend replay --replay-file " + tmp.path("replay.jsonl") +
      " --skip-failures --error-sidecar " + tmp.path("errors.jsonl"));
  CHECK(lenient.exit_code == 0);
  json ok = json::parse(tmp.read("c.jsonl"));
  CHECK(ok["completion"] == "ok");
  json failure = json::parse(tmp.read("errors.jsonl"));
  CHECK(failure["utterance_id"] == "v");
}

TEST_CASE("complete reaches an http endpoint with a bearer token") {
  httplib::Server server;
  server.Post("/v1/complete", [](const httplib::Request& req, httplib::Response& res) {
    json body = json::parse(req.body);
    std::string answer = body["prompt"].get<std::string>() + "!";
    if (req.get_header_value("Authorization") != "Bearer sesame") {
      res.status = 401;
      return;
    }
    res.set_content(json{{"completion", answer}}.dump(), "application/json");
  });
  int port = server.bind_to_any_port("127.0.0.1");
  std::thread server_thread([&server] { server.listen_after_bind(); });
  server.wait_until_ready();

  TempDir tmp;
  tmp.write("prompts.jsonl",
            json{{"utterance_id", "u"}, {"segment_index", 0}, {"prompt", "ping"}}.dump() +
                "\n");
  setenv("DIARPOST_TEST_KEY", "sesame", 1);
  CommandResult result = run_cli(
      "complete --prompts " + tmp.path("prompts.jsonl") + " --output " + tmp.path("c.jsonl") +
      " --backend http --endpoint http://127.0.0.1:" + std::to_string(port) +
      "/v1/complete --api-key-env DIARPOST_TEST_KEY --max-retries 0");
  CHECK(result.exit_code == 0);
  json completion = json::parse(tmp.read("c.jsonl"));
  CHECK(completion["completion"] == "ping!");

  // Wrong credentials surface as a backend failure (exit 3).
  setenv("DIARPOST_TEST_KEY", "wrong", 1);
  CommandResult denied = run_cli(
      "complete --prompts " + tmp.path("prompts.jsonl") + " --output " + tmp.path("d.jsonl") +
      " --backend http --endpoint http://127.0.0.1:" + std::to_string(port) +
      "/v1/complete --api-key-env DIARPOST_TEST_KEY --max-retries 0");
  CHECK(denied.exit_code == 3);

  server.stop();
  server_thread.join();
}

TEST_CASE("the full file pipeline with echo is the identity") {
  TempDir tmp;
  tmp.write("in.jsonl", consultation_record());
  REQUIRE(run_cli("orchestrate --input " + tmp.path("in.jsonl") + " --output " +
                  tmp.path("orch.jsonl"))
              .exit_code == 0);
  REQUIRE(run_cli("build-prompts --input " + tmp.path("orch.jsonl") + " --output " +
                  tmp.path("prompts.jsonl") + " --max-len 120")
              .exit_code == 0);
  REQUIRE(run_cli("complete --prompts " + tmp.path("prompts.jsonl") + " --output " +
                  tmp.path("comp.jsonl") + " --backend echo --concurrency 8")
              .exit_code == 0);
  REQUIRE(run_cli("finalize --input-utterances " + tmp.path("orch.jsonl") +
                  " --completions " + tmp.path("comp.jsonl") + " --output " +
                  tmp.path("final.jsonl"))
              .exit_code == 0);

  json before = json::parse(tmp.read("orch.jsonl"));
  json after = json::parse(tmp.read("final.jsonl"));
  CHECK(before["hyp_text"] == after["hyp_text"]);
  CHECK(before["hyp_spk"] == after["hyp_spk"]);
}

TEST_CASE("finalize applies the replayed correction and ignores trailing junk") {
  TempDir tmp;
  diarpost::DiarizedUtterance original = diarpost::parse(dt::kConversationDegraded, 1);
  json utterance = {{"utterance_id", "conv"},
                    {"hyp_text", diarpost::join_words(original.words)},
                    {"hyp_spk", diarpost::format_speaker_list(original.speakers)}};
  tmp.write("utt.jsonl", utterance.dump() + "\n");
  json completion = {{"utterance_id", "conv"},
                     {"segment_index", 0},
                     {"completion", std::string(dt::kConversationCorrected) +
                                        " [eod] <spk:9> ignored tail"}};
  tmp.write("comp.jsonl", completion.dump() + "\n");

  REQUIRE(run_cli("finalize --input-utterances " + tmp.path("utt.jsonl") + " --completions " +
                  tmp.path("comp.jsonl") + " --output " + tmp.path("out.jsonl"))
              .exit_code == 0);
  json out = json::parse(tmp.read("out.jsonl"));
  CHECK(out["hyp_text"] == utterance["hyp_text"]);
  CHECK(out["hyp_spk"] ==
        diarpost::format_speaker_list(dt::kConversationExpectedSpeakers));
}

TEST_CASE("finalize rejects completions for unknown utterances") {
  TempDir tmp;
  tmp.write("utt.jsonl",
            json{{"utterance_id", "known"}, {"hyp_text", "a"}, {"hyp_spk", "1"}}.dump() + "\n");
  tmp.write("comp.jsonl", json{{"utterance_id", "unknown"},
                               {"segment_index", 0},
                               {"completion", "<spk:1> a"}}
                                  .dump() +
                              "\n");
  CommandResult result =
      run_cli("finalize --input-utterances " + tmp.path("utt.jsonl") + " --completions " +
              tmp.path("comp.jsonl") + " --output " + tmp.path("out.jsonl"));
  CHECK(result.exit_code == 2);
  CHECK(result.output.find("unknown") != std::string::npos);
}

TEST_CASE("metrics reproduces the worked example and aggregates micro") {
  TempDir tmp;
  json first = {{"utterance_id", "a"},
                {"hyp_text", "a b c d"},
                {"hyp_spk", "2 2 1 2"},
                {"ref_text", "a b c d"},
                {"ref_spk", "1 1 2 2"}};
  json second = {{"utterance_id", "b"},
                 {"hyp_text", "a b c d"},
                 {"hyp_spk", "1 1 2 2"},
                 {"ref_text", "a b c d"},
                 {"ref_spk", "1 1 2 2"}};
  tmp.write("in.jsonl", first.dump() + "\n" + second.dump() + "\n");

  REQUIRE(run_cli("metrics --input " + tmp.path("in.jsonl") + " --output-report " +
                  tmp.path("report.json"))
              .exit_code == 0);
  json report = json::parse(tmp.read("report.json"));
  CHECK(report["wder"] == doctest::Approx(0.125));  // (1+0)/(4+4)
  CHECK(report["wer"] == doctest::Approx(0.0));
  CHECK(report["utterances"] == 2);
  CHECK(report["per_utterance"][0]["wder_num"] == 1);
}

TEST_CASE("metrics lists records lacking references and exits with schema code") {
  TempDir tmp;
  tmp.write("in.jsonl",
            json{{"utterance_id", "x"}, {"hyp_text", "a"}, {"hyp_spk", "1"}}.dump() + "\n");
  CommandResult result = run_cli("metrics --input " + tmp.path("in.jsonl"));
  CHECK(result.exit_code == 2);
  CHECK(result.output.find("ref_text") != std::string::npos);
}

TEST_CASE("train-data emits speaker-identical pairs when hyp equals ref") {
  TempDir tmp;
  json record = {{"utterance_id", "u"},
                 {"hyp_text", "a b c"},
                 {"hyp_spk", "1 2 2"},
                 {"ref_text", "a b c"},
                 {"ref_spk", "1 2 2"}};
  tmp.write("in.jsonl", record.dump() + "\n");
  REQUIRE(run_cli("train-data --flavor hyp2ora --input " + tmp.path("in.jsonl") +
                  " --output " + tmp.path("pairs.jsonl"))
              .exit_code == 0);
  json pair = json::parse(tmp.read("pairs.jsonl"));
  CHECK(pair["flavor"] == "hyp2ora");
  CHECK(pair["prompt"] == "<spk:1> a <spk:2> b c --> ");
  CHECK(pair["completion"] == "<spk:1> a <spk:2> b c [eod]");
}

TEST_CASE("train-data mixed interleaves flavors per utterance") {
  TempDir tmp;
  std::string records;
  for (const char* id : {"u1", "u2"}) {
    records += json{{"utterance_id", id},
                    {"hyp_text", "a b"},
                    {"hyp_spk", "1 2"},
                    {"ref_text", "a b"},
                    {"ref_spk", "1 2"}}
                   .dump() +
               "\n";
  }
  tmp.write("in.jsonl", records);
  REQUIRE(run_cli("train-data --flavor mixed --input " + tmp.path("in.jsonl") + " --output " +
                  tmp.path("pairs.jsonl"))
              .exit_code == 0);
  std::istringstream lines(tmp.read("pairs.jsonl"));
  std::string line;
  std::vector<std::string> flavors;
  while (std::getline(lines, line)) flavors.push_back(json::parse(line)["flavor"]);
  CHECK(flavors == std::vector<std::string>{"hyp2ora", "deg2ref", "hyp2ora", "deg2ref"});
}

TEST_CASE("train-data --degrade reruns byte-identically for a fixed seed") {
  TempDir tmp;
  std::string records;
  for (int i = 0; i < 5; ++i) {
    std::string text, speakers;
    for (int w = 0; w < 40; ++w) {
      text += (w ? " w" : "w") + std::to_string(w);
      speakers += (w ? " " : "") + std::to_string(w / 10 % 3 + 1);
    }
    records += json{{"utterance_id", "u" + std::to_string(i)},
                    {"ref_text", text},
                    {"ref_spk", speakers}}
                   .dump() +
               "\n";
  }
  tmp.write("in.jsonl", records);
  std::string command = "train-data --flavor deg2ref --degrade --seed 77 --input " +
                        tmp.path("in.jsonl") + " --output ";
  REQUIRE(run_cli(command + tmp.path("first.jsonl")).exit_code == 0);
  REQUIRE(run_cli(command + tmp.path("second.jsonl")).exit_code == 0);
  CHECK(tmp.read("first.jsonl") == tmp.read("second.jsonl"));
  CHECK(!tmp.read("first.jsonl").empty());
}

TEST_CASE("degrade is deterministic per seed and changes something eventually") {
  TempDir tmp;
  std::string text, speakers;
  for (int w = 0; w < 60; ++w) {
    text += (w ? " w" : "w") + std::to_string(w);
    speakers += (w ? " " : "") + std::to_string(w / 3 % 2 + 1);
  }
  tmp.write("in.jsonl", json{{"utterance_id", "u"},
                             {"ref_text", text},
                             {"ref_spk", speakers}}
                                .dump() +
                            "\n");
  REQUIRE(run_cli("degrade --input " + tmp.path("in.jsonl") + " --seed 1 --flip-prob 0.5" +
                  " --output " + tmp.path("a.jsonl"))
              .exit_code == 0);
  REQUIRE(run_cli("degrade --input " + tmp.path("in.jsonl") + " --seed 1 --flip-prob 0.5" +
                  " --output " + tmp.path("b.jsonl"))
              .exit_code == 0);
  CHECK(tmp.read("a.jsonl") == tmp.read("b.jsonl"));
  json degraded = json::parse(tmp.read("a.jsonl"));
  CHECK(degraded["hyp_text"] == text);
  CHECK(degraded["hyp_spk"] != speakers);  // flip-prob 0.5 over 20 turns
}

TEST_CASE("synth-prompt fills the template or samples a spec") {
  TempDir tmp;
  tmp.write("example.txt", "<speaker:1> hi\n<speaker:2> hello");
  CommandResult result = run_cli("synth-prompt --topic food --scene \"casual conversation\"" +
                                 std::string(" --nspk 2 --nwords 500 --example-file ") +
                                 tmp.path("example.txt"));
  CHECK(result.exit_code == 0);
  CHECK(result.output.find(
            "on the topic of \"food\" in the scene of \"casual conversation\"") !=
        std::string::npos);
  CHECK(result.output.find("<speaker:1> hi") != std::string::npos);

  CommandResult bad_topic = run_cli("synth-prompt --topic nonsense --scene debate");
  CHECK(bad_topic.exit_code == 1);
  CHECK(bad_topic.output.find("UnknownTopic") != std::string::npos);

  CommandResult sampled_a = run_cli("synth-prompt --sample --seed 5");
  CommandResult sampled_b = run_cli("synth-prompt --sample --seed 5");
  CHECK(sampled_a.exit_code == 0);
  CHECK(sampled_a.output == sampled_b.output);
}

TEST_CASE("stats histograms hypothesis speaker counts") {
  TempDir tmp;
  std::string records;
  records += json{{"utterance_id", "a"}, {"hyp_text", "x y"}, {"hyp_spk", "1 2"}}.dump() + "\n";
  records += json{{"utterance_id", "b"}, {"hyp_text", "x y"}, {"hyp_spk", "1 1"}}.dump() + "\n";
  records += json{{"utterance_id", "c"}, {"hyp_text", "x y z"}, {"hyp_spk", "3 1 2"}}.dump() + "\n";
  tmp.write("in.jsonl", records);
  CommandResult result = run_cli("stats --input " + tmp.path("in.jsonl"));
  REQUIRE(result.exit_code == 0);
  json histogram = json::parse(result.output);
  CHECK(histogram["1"] == 1);
  CHECK(histogram["2"] == 1);
  CHECK(histogram["3"] == 1);

  tmp.write("empty.jsonl", "");
  CommandResult empty = run_cli("stats --input " + tmp.path("empty.jsonl"));
  CHECK(empty.exit_code == 0);
  CHECK(json::parse(empty.output) == json::object());
}

TEST_CASE("usage errors exit with code 1") {
  CommandResult result = run_cli("build-prompts --no-such-flag");
  CHECK(result.exit_code == 1);
}
