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

#ifndef DIARPOST_RNG_HPP_
#define DIARPOST_RNG_HPP_

#include <cstdint>
#include <random>
#include <string_view>

namespace diarpost {

// Deterministic random source for data generation and sampling.
//
// The engine is std::mt19937_64, whose output stream is pinned bit-exact by
// the standard. The int/double mappings below are hand-rolled (the std
// distributions are not portable across standard libraries), so a (seed,
// input) pair reproduces byte-identical output on every platform. Changing
// any of these mappings is a data-format break.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1) with 53 significant bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [lo, hi], unbiased via rejection sampling.
  std::int64_t next_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    if (range == 0) return static_cast<std::int64_t>(next_u64());  // full span
    const std::uint64_t threshold = (0 - range) % range;  // 2^64 mod range
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x < threshold);
    return lo + static_cast<std::int64_t>(x % range);
  }

  // Probability gate: true with probability p. Strict comparison makes
  // p == 0 exactly never and p == 1 exactly always.
  bool next_bernoulli(double p) { return next_double() < p; }

 private:
  std::mt19937_64 engine_;
};

// FNV-1a, used to fold string keys into sub-seeds.
inline std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

// Per-utterance sub-seed, so utterances can be processed in any order or in
// parallel without changing their individual degradation streams.
inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view utterance_id) {
  return seed ^ fnv1a64(utterance_id);
}

}  // namespace diarpost

#endif  // DIARPOST_RNG_HPP_
