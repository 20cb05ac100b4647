// Copyright 2026 The edit5 Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EDIT5_NOISE_H_
#define EDIT5_NOISE_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "edit5/program.h"
#include "edit5/tokens.h"

namespace edit5 {

struct NoiseConfig {
  double drop_prob = 0.15;  // per position, starts a dropped span
  double swap_prob = 0.1;   // per position, swaps two adjacent spans
  double add_prob = 0.1;    // per gap, inserts a sampled span
  double span_p = 0.5;      // geometric span length parameter, in (0, 1]
  std::uint64_t seed = 0;

  // Throws ValidationError.
  void Validate() const;
};

// Random source with distributions written out explicitly so that a seed
// yields the same stream on every standard library.
class NoiseRng {
 public:
  explicit NoiseRng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1).
  double Uniform();
  // Uniform in [0, n); n > 0.
  std::size_t Below(std::size_t n);
  // Number of trials up to and including the first success, >= 1.
  std::size_t Geometric(double p);

 private:
  std::mt19937_64 engine_;
};

// Seed for one line of a corpus, mixed from the global seed and line number.
std::uint64_t SentenceSeed(std::uint64_t global_seed, std::uint64_t line);

// Fixed-capacity uniform sample of the tokens streamed through it.
class TokenReservoir {
 public:
  TokenReservoir(std::size_t capacity, std::uint64_t seed);

  void Add(const std::string& token);
  void Add(const TokenSeq& tokens);

  const std::vector<std::string>& tokens() const { return tokens_; }

 private:
  std::size_t capacity_;
  std::uint64_t seen_ = 0;
  NoiseRng rng_;
  std::vector<std::string> tokens_;
};

// Drops spans, then swaps adjacent spans, then adds spans drawn uniformly from
// `pool` (from the sentence itself when the pool is empty).
std::vector<std::string> Corrupt(std::span<const std::string> tokens,
                                 const NoiseConfig& config,
                                 std::span<const std::string> pool,
                                 NoiseRng& rng);
TokenSeq Corrupt(const TokenSeq& sentence, const NoiseConfig& config,
                 std::span<const std::string> pool, NoiseRng& rng);

struct PretrainingExample {
  TokenSeq corrupted;
  EditProgram program;  // aligns `corrupted` back onto the sentence
};

// Corrupts `sentence` and aligns the corruption back onto it, so the program
// realizes the original token sequence.
PretrainingExample MakePretrainingExample(const TokenSeq& sentence,
                                          const NoiseConfig& config,
                                          std::span<const std::string> pool,
                                          NoiseRng& rng);

}  // namespace edit5

#endif  // EDIT5_NOISE_H_
