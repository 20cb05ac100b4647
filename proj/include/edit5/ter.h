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

#ifndef EDIT5_TER_H_
#define EDIT5_TER_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace edit5 {

struct TerOptions {
  bool shifts = true;
  std::size_t max_shift_size = 10;      // tokens per shifted block
  std::size_t max_shift_distance = 10;  // positions a block may move
  // Skip blocks whose tokens the current alignment already matches.
  bool prune_correct_blocks = true;
};

// Raw edit counts turning a hypothesis into a reference. Deletions remove
// hypothesis tokens, insertions add reference tokens.
struct EditCounts {
  std::size_t insertions = 0;
  std::size_t deletions = 0;
  std::size_t substitutions = 0;
  std::size_t shifts = 0;
  std::size_t reference_length = 0;

  std::size_t total() const {
    return insertions + deletions + substitutions + shifts;
  }
  EditCounts& operator+=(const EditCounts& other);
  bool operator==(const EditCounts&) const = default;
};

// `ter` is a ratio; the component fields are percentages of the reference
// length.
struct TerBreakdown {
  double ter = 0.0;
  double insertions = 0.0;
  double deletions = 0.0;
  double substitutions = 0.0;
  double shifts = 0.0;
  EditCounts edits;
};

// Token-level Levenshtein distance with unit costs.
std::size_t EditDistance(std::span<const std::string> hyp,
                         std::span<const std::string> ref);

// Greedy TER: repeatedly applies the block shift with the largest net
// reduction in edit distance (each shift costs one edit), then decomposes the
// remaining edit-distance alignment. Blocks are tried longest first, then by
// start and destination; the first of equally good shifts wins.
EditCounts TerEdits(std::span<const std::string> hyp,
                    std::span<const std::string> ref,
                    const TerOptions& options = {});

// Normalizes by reference length; throws ValidationError for an empty
// reference.
TerBreakdown Normalize(const EditCounts& edits);

TerBreakdown Ter(std::span<const std::string> hyp,
                 std::span<const std::string> ref,
                 const TerOptions& options = {});

}  // namespace edit5

#endif  // EDIT5_TER_H_
