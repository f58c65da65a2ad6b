#include <doctest.h>

#include "diarpost/codec.hpp"
#include "diarpost/pipeline.hpp"
#include "diarpost/rng.hpp"
#include "fixtures.hpp"
#include "generators.hpp"

using namespace diarpost;
namespace dt = diarpost::testing;

TEST_CASE("postprocess with the echo backend is the identity") {
  Rng rng(66);
  PromptConfig cfg;
  cfg.max_measure = 120;  // several segments per utterance
  BackendConfig backend_cfg;
  backend_cfg.prompt_prefix = cfg.prompt_prefix;
  backend_cfg.prompt_suffix = cfg.prompt_suffix;
  backend_cfg.completion_suffix = cfg.completion_suffix;
  EchoBackend echo(backend_cfg);

  for (int round = 0; round < 50; ++round) {
    DiarizedUtterance u = dt::random_utterance(rng, 40, 3, "u" + std::to_string(round));
    auto [out, report] = postprocess(u, cfg, echo, 4);
    CHECK(out == u);
    CHECK(report.speakers_changed == 0);
    CHECK(report.segments_emitted == report.completions_received);
    CHECK(report.errors.empty());
  }
}

TEST_CASE("postprocess applies a replayed correction") {
  DiarizedUtterance original = parse(dt::kConversationDegraded, 1);
  original.utterance_id = "conv";

  std::vector<CompletionRecord> records = {
      {"conv", 0, std::string(dt::kConversationCorrected) + " [eod]"}};
  ReplayBackend replay(records);

  PromptConfig cfg;
  cfg.prompt_prefix = std::string(zero_shot_prefix());
  auto [out, report] = postprocess(original, cfg, replay);
  CHECK(out.words == original.words);
  CHECK(out.speakers == dt::kConversationExpectedSpeakers);
  CHECK(report.speakers_changed == dt::kConversationMovedWords);
  CHECK(report.segments_emitted == 1);
}

TEST_CASE("a backend that returns empty strings leaves the input unchanged") {
  struct EmptyBackend : CompletionBackend {
    std::string complete(const PromptRecord&) override { return ""; }
  } backend;

  Rng rng(8);
  PromptConfig cfg;
  for (int round = 0; round < 20; ++round) {
    DiarizedUtterance u = dt::random_utterance(rng, 25, 3);
    auto [out, report] = postprocess(u, cfg, backend);
    CHECK(out == u);
    CHECK(report.speakers_changed == 0);
  }
}

TEST_CASE("backend failures carry segment keys, or are tolerated on request") {
  ReplayBackend empty_replay({});
  DiarizedUtterance u{"u1", {"a", "b"}, {1, 2}};
  PromptConfig cfg;
  CHECK_THROWS_AS(postprocess(u, cfg, empty_replay), DiarError);

  auto [out, report] = postprocess(u, cfg, empty_replay, 1, /*tolerate_failures=*/true);
  CHECK(out == u);
  REQUIRE(report.errors.size() == 1);
  CHECK(report.errors[0].find("u1") != std::string::npos);
}

TEST_CASE("postprocess never mutates its input") {
  DiarizedUtterance u{"u", {"a", "b", "c"}, {1, 2, 1}};
  DiarizedUtterance copy = u;
  BackendConfig cfg;
  EchoBackend echo(cfg);
  PromptConfig prompt_cfg;
  auto result = postprocess(u, prompt_cfg, echo);
  CHECK(u == copy);
}
