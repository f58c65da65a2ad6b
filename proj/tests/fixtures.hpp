// Shared test fixtures: the worked examples used across unit and acceptance
// suites. Expected values are frozen from hand derivations; see the oracle
// checks next to each use.

#ifndef DIARPOST_TESTS_FIXTURES_HPP_
#define DIARPOST_TESTS_FIXTURES_HPP_

#include <string>
#include <vector>

#include "diarpost/jsonl.hpp"
#include "diarpost/types.hpp"

namespace diarpost::testing {

// Speaker-transfer worked example: a 9-word source against an 8-word target
// that differs by one deletion and two substitutions.
struct TransferExample {
  std::vector<std::string> src_words = {"hello", "good", "morning", "hi",    "how",
                                        "are",   "you",  "pretty",  "good"};
  std::vector<SpeakerId> src_speakers = {1, 1, 1, 2, 2, 2, 2, 1, 1};
  std::vector<std::string> tgt_words = {"hello", "morning", "hi", "hey",
                                        "are",   "you",     "be", "good"};
  std::vector<SpeakerId> tgt_speakers = {1, 2, 2, 2, 1, 1, 2, 1};
  std::vector<SpeakerId> expected = {1, 1, 2, 2, 2, 2, 1, 1};
  long long expected_distance = 3;
};

// A two-speaker conversation whose diarization misplaced words across turn
// boundaries, with the corrected version a capable model should produce.
// The corrected text also rewrites two words ("Oh"->"Oh,", "yeah"->"yeah,"),
// which speaker transfer must absorb without touching the original words.
inline const char* kConversationDegraded =
    "<spk:1> Good morning Patrick, how\n"
    "<spk:2> are you? Good, good. How are you Tom? Pretty\n"
    "<spk:1> good. Going to work?\n"
    "<spk:2> Yes. Busy day. How are your kids? Do they go\n"
    "<spk:1> to school? Oh they are too young for that. I sent them to daycare earlier\n"
    "<spk:2> today. Oh yeah I forgot about that.";

inline const char* kConversationCorrected =
    "<spk:1> Good morning Patrick, how are you?\n"
    "<spk:2> Good, good. How are you Tom?\n"
    "<spk:1> Pretty good. Going to work?\n"
    "<spk:2> Yes. Busy day. How are your kids? Do they go to school?\n"
    "<spk:1> Oh, they are too young for that. I sent them to daycare earlier today.\n"
    "<spk:2> Oh yeah, I forgot about that.";

// Per-word speakers after transferring kConversationCorrected onto
// kConversationDegraded (49 words; positional alignment with 2 substitutions,
// identity label mapping wins 43 agreements to 6).
inline const std::vector<SpeakerId> kConversationExpectedSpeakers = {
    1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 2, 2,
    2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2};
inline constexpr std::size_t kConversationMovedWords = 6;

// Orchestration fixture: sentence chunks with timings plus diarizer
// segments; every word of a chunk shares the chunk's interval.
struct TimedChunk {
  double start;
  double end;
  const char* text;
  SpeakerId expected_speaker;
};

struct OrchestrationExample {
  std::vector<TimedChunk> chunks;
  std::vector<SpeakerSegment> segments;

  OrchestrationInput input() const {
    OrchestrationInput in;
    for (const TimedChunk& chunk : chunks) {
      for (const std::string& word : split_words(chunk.text)) {
        in.timed_words.push_back({word, chunk.start, chunk.end});
      }
    }
    in.segments = segments;
    return in;
  }

  std::vector<SpeakerId> expected_speakers() const {
    std::vector<SpeakerId> expected;
    for (const TimedChunk& chunk : chunks) {
      for (std::size_t i = 0; i < split_words(chunk.text).size(); ++i) {
        expected.push_back(chunk.expected_speaker);
      }
    }
    return expected;
  }
};

// Greeting conversation: words overlap their segments cleanly except the
// third chunk (nearest-segment rule) and the last (partial overlap).
inline OrchestrationExample greeting_orchestration() {
  return {{{0.0, 2.3, "Good morning Patrick", 1},
           {2.5, 5.2, "how are you?", 1},
           {5.6, 6.1, "Good, good.", 2},
           {6.2, 8.3, "How are you Tom?", 2},
           {9.2, 9.9, "Pretty good.", 1},
           {10.0, 11.1, "Going to work?", 1},
           {12.5, 13.6, "Yes. Busy day.", 2}},
          {{1, 0.0, 5.1}, {2, 5.3, 8.7}, {1, 9.2, 10.9}, {2, 12.1, 13.5}}};
}

// Doctor/patient conversation with looser timing mismatches.
inline OrchestrationExample consultation_orchestration() {
  return {{{0.0, 5.6, "Hi, how can I help you today?", 1},
           {6.2, 11.1, "Hi, I recently often feel quite dizzy at work.", 2},
           {11.6, 15.5, "Do you have any of these symptoms?", 1},
           {16.6, 18.5, "Like coughing, fever, or running nose?", 1},
           {20.0, 21.1, "No, I don't think so.", 2},
           {22.2, 29.9, "What do you usually eat for breakfast, lunch and dinner?", 1},
           {31.2, 34.8, "I'm on a diet, so not eating very much.", 2},
           {35.2, 39.8, "Mostly just one slice of toast in the morning, and eating salad "
                        "for lunch and dinner.", 2}},
          {{1, 0.3, 5.3}, {2, 6.0, 12.0}, {1, 12.9, 20.1}, {2, 20.2, 21.0},
           {1, 21.8, 31.1}, {2, 32.4, 40.7}}};
}

}  // namespace diarpost::testing

#endif  // DIARPOST_TESTS_FIXTURES_HPP_
