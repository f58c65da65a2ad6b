#include <doctest.h>

#include "diarpost/codec.hpp"
#include "diarpost/postprocess.hpp"
#include "diarpost/prompt.hpp"
#include "diarpost/rng.hpp"
#include "fixtures.hpp"
#include "generators.hpp"

using namespace diarpost;
namespace dt = diarpost::testing;

TEST_CASE("truncate_completion cuts at the first suffix occurrence") {
  CHECK(truncate_completion("<spk:1> hi [eod]", " [eod]") == "<spk:1> hi");
  CHECK(truncate_completion("<spk:1> hi [eod] junk <spk:2>", " [eod]") == "<spk:1> hi");
  CHECK(truncate_completion("<spk:1> hi", " [eod]") == "<spk:1> hi");
  CHECK(truncate_completion("anything", "") == "anything");
}

TEST_CASE("parse_segment falls back to the previous speaker, then speaker 1") {
  DiarizedUtterance first = parse_segment("how are you", std::nullopt);
  CHECK(first.speakers == std::vector<SpeakerId>{1, 1, 1});

  DiarizedUtterance later = parse_segment("how are you", 2);
  CHECK(later.speakers == std::vector<SpeakerId>{2, 2, 2});

  DiarizedUtterance tokened = parse_segment("<spk:3> ok", 1);
  CHECK(tokened.words == std::vector<std::string>{"ok"});
  CHECK(tokened.speakers == std::vector<SpeakerId>{3});
}

TEST_CASE("finalize with echoed prompts returns the original utterance") {
  DiarizedUtterance original{"u", {"good", "morning", "how", "are", "you"}, {1, 1, 2, 2, 2}};
  std::vector<CompletionRecord> completions = {
      {"u", 0, serialize(original) + " [eod]"},
  };
  CHECK(finalize(original, completions) == original);
}

TEST_CASE("finalize keeps the original words when the model rewrites one") {
  DiarizedUtterance original{"u", {"i", "went", "to", "the", "store"}, {1, 1, 2, 2, 2}};
  // Same speakers, one word rewritten.
  std::vector<CompletionRecord> completions = {
      {"u", 0, "<spk:1> i walked <spk:2> to the store [eod]"}};
  DiarizedUtterance out = finalize(original, completions);
  CHECK(out.words == original.words);
  CHECK(out.speakers == original.speakers);
}

TEST_CASE("finalize chains the last speaker across segments") {
  DiarizedUtterance original{"u", {"a", "b", "c", "d"}, {1, 1, 2, 2}};
  // Second segment opens without a token: it continues speaker 2.
  std::vector<CompletionRecord> completions = {
      {"u", 0, "<spk:1> a <spk:2> b [eod]"},
      {"u", 1, "c d [eod]"},
  };
  DiarizedUtterance out = finalize(original, completions);
  CHECK(out.speakers == std::vector<SpeakerId>{1, 2, 2, 2});
}

TEST_CASE("finalize applies the corrected conversation onto the original words") {
  DiarizedUtterance original = parse(dt::kConversationDegraded, 1);
  original.utterance_id = "conv";
  std::vector<CompletionRecord> completions = {
      {"conv", 0, std::string(dt::kConversationCorrected) + " [eod] trailing junk"}};
  DiarizedUtterance out = finalize(original, completions);
  CHECK(out.words == original.words);
  CHECK(out.speakers == dt::kConversationExpectedSpeakers);
}

TEST_CASE("finalize detects segment gaps and duplicates") {
  DiarizedUtterance original{"u", {"a", "b"}, {1, 1}};
  std::vector<CompletionRecord> gap = {{"u", 0, "a"}, {"u", 2, "b"}};
  CHECK_THROWS_AS(finalize(original, gap), DiarError);
  std::vector<CompletionRecord> dup = {{"u", 0, "a"}, {"u", 0, "b"}};
  CHECK_THROWS_AS(finalize(original, dup), DiarError);
  std::vector<CompletionRecord> no_zero = {{"u", 1, "a"}};
  CHECK_THROWS_AS(finalize(original, no_zero), DiarError);
}

TEST_CASE("finalize with no completions returns the original unchanged") {
  DiarizedUtterance original{"u", {"a", "b"}, {1, 2}};
  CHECK(finalize(original, {}) == original);
}

TEST_CASE("empty and garbage completions never change the word sequence") {
  Rng rng(41);
  for (int round = 0; round < 200; ++round) {
    DiarizedUtterance original = dt::random_utterance(rng, 20, 3);
    std::vector<CompletionRecord> completions;
    int n_segments = static_cast<int>(rng.next_int(1, 3));
    for (int s = 0; s < n_segments; ++s) {
      std::string text;
      switch (rng.next_int(0, 3)) {
        case 0: text = ""; break;
        case 1: text = "<spk:9> <spk:8>"; break;
        case 2: text = "complete <spk:zz> nonsense \xf0\x9f\x98\x80 here"; break;
        default: text = serialize(dt::random_utterance(rng, 10, 5)); break;
      }
      completions.push_back({original.utterance_id, s, text + " [eod]"});
    }
    DiarizedUtterance out = finalize(original, completions);
    CHECK(out.words == original.words);
    CHECK(out.speakers.size() == original.speakers.size());
    CHECK(!validate_utterance(out).has_value());
  }
}
