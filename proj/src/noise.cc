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

#include "edit5/noise.h"

#include <algorithm>
#include <cmath>

#include "edit5/align.h"
#include "edit5/errors.h"

namespace edit5 {
namespace {

void CheckProbability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ValidationError(std::string(name) + " must be in [0, 1]");
  }
}

}  // namespace

void NoiseConfig::Validate() const {
  CheckProbability(drop_prob, "drop_prob");
  CheckProbability(swap_prob, "swap_prob");
  CheckProbability(add_prob, "add_prob");
  if (!(span_p > 0.0 && span_p <= 1.0)) {
    throw ValidationError("span_p must be in (0, 1]");
  }
}

double NoiseRng::Uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::size_t NoiseRng::Below(std::size_t n) {
  const std::uint64_t bound = n;
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return static_cast<std::size_t>(x % bound);
}

std::size_t NoiseRng::Geometric(double p) {
  if (p >= 1.0) return 1;
  const double u = 1.0 - Uniform();  // (0, 1]
  return 1 + static_cast<std::size_t>(std::floor(std::log(u) / std::log1p(-p)));
}

std::uint64_t SentenceSeed(std::uint64_t global_seed, std::uint64_t line) {
  // splitmix64 finalizer over the combined value.
  std::uint64_t z = global_seed + 0x9e3779b97f4a7c15ULL * (line + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

TokenReservoir::TokenReservoir(std::size_t capacity, std::uint64_t seed)
    : capacity_(capacity), rng_(seed) {
  tokens_.reserve(capacity);
}

void TokenReservoir::Add(const std::string& token) {
  ++seen_;
  if (tokens_.size() < capacity_) {
    tokens_.push_back(token);
    return;
  }
  const std::size_t slot = rng_.Below(static_cast<std::size_t>(seen_));
  if (slot < capacity_) tokens_[slot] = token;
}

void TokenReservoir::Add(const TokenSeq& tokens) {
  for (const Token& t : tokens.tokens()) Add(t.text);
}

std::vector<std::string> Corrupt(std::span<const std::string> tokens,
                                 const NoiseConfig& config,
                                 std::span<const std::string> pool,
                                 NoiseRng& rng) {
  config.Validate();

  std::vector<std::string> kept;
  for (std::size_t i = 0; i < tokens.size();) {
    if (config.drop_prob > 0.0 && rng.Uniform() < config.drop_prob) {
      i += rng.Geometric(config.span_p);
      continue;
    }
    kept.push_back(tokens[i++]);
  }

  std::vector<std::string> swapped;
  swapped.reserve(kept.size());
  for (std::size_t i = 0; i < kept.size();) {
    if (config.swap_prob > 0.0 && rng.Uniform() < config.swap_prob) {
      const std::size_t left = std::min(rng.Geometric(config.span_p), kept.size() - i);
      const std::size_t right =
          std::min(rng.Geometric(config.span_p), kept.size() - i - left);
      if (right > 0) {
        swapped.insert(swapped.end(), kept.begin() + i + left,
                       kept.begin() + i + left + right);
        swapped.insert(swapped.end(), kept.begin() + i, kept.begin() + i + left);
        i += left + right;
        continue;
      }
    }
    swapped.push_back(kept[i++]);
  }

  const std::span<const std::string> source = pool.empty() ? tokens : pool;
  std::vector<std::string> out;
  for (std::size_t gap = 0; gap <= swapped.size(); ++gap) {
    if (config.add_prob > 0.0 && !source.empty() &&
        rng.Uniform() < config.add_prob) {
      const std::size_t len = rng.Geometric(config.span_p);
      for (std::size_t k = 0; k < len; ++k) {
        out.push_back(source[rng.Below(source.size())]);
      }
    }
    if (gap < swapped.size()) out.push_back(std::move(swapped[gap]));
  }
  return out;
}

TokenSeq Corrupt(const TokenSeq& sentence, const NoiseConfig& config,
                 std::span<const std::string> pool, NoiseRng& rng) {
  const std::vector<std::string> tokens = sentence.Strings();
  return TokenSeq::FromTokens(Corrupt(tokens, config, pool, rng));
}

PretrainingExample MakePretrainingExample(const TokenSeq& sentence,
                                          const NoiseConfig& config,
                                          std::span<const std::string> pool,
                                          NoiseRng& rng) {
  TokenSeq corrupted = Corrupt(sentence, config, pool, rng);
  EditProgram program = Align(corrupted, sentence);
  return {std::move(corrupted), std::move(program)};
}

}  // namespace edit5
