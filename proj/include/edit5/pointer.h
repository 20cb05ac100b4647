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

#ifndef EDIT5_POINTER_H_
#define EDIT5_POINTER_H_

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "edit5/chain.h"
#include "edit5/tag.h"

namespace edit5 {

// Pointer attention scores for a source of n tokens, as an (n+1) x (n+1)
// matrix:
//   row 0 is the sentinel, row r >= 1 is source token r - 1 (the pointer);
//   column c < n is source token c, column n is the end of the chain (the
//   pointed-to token).
// With this layout the diagonal encodes the identity order: the sentinel
// points at token 0, token 0 at token 1, ..., token n - 1 at the end.
// Entries equal to -inf are forbidden links. Rows and columns of DELETE
// tokens are ignored.
using ScoreMatrix = Eigen::MatrixXd;

// Boolean mask of permitted links, same layout as ScoreMatrix.
using LinkMask = Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic>;

struct SinkhornOptions {
  int iterations = 20;
  double temperature = 1.0;
};

// Scores above this magnitude (after temperature) switch Sinkhorn to the log
// domain.
inline constexpr double kLogDomainThreshold = 30.0;

// S^0 = exp(scores / temperature); S^i = T_col(T_row(S^(i-1))).
// Every row and column takes part. Throws NumericError on NaN or +inf input
// and ValidationError on a non-positive temperature or negative iteration
// count.
Eigen::MatrixXd Sinkhorn(const ScoreMatrix& scores,
                         const SinkhornOptions& options = {});

// Same, restricted to the rows and columns of KEEP tokens (plus the sentinel
// row and end column). Ignored rows and columns are zero in the result.
Eigen::MatrixXd Sinkhorn(const ScoreMatrix& scores, std::span<const Tag> tags,
                         const SinkhornOptions& options = {});

enum class ExtractMethod { kGreedy, kExact };

ExtractMethod ParseExtractMethod(std::string_view name);

// Reads a valid pointer chain out of a (nearly) doubly stochastic matrix.
//
// kGreedy takes entries in decreasing order, skipping those whose row or
// column is already used or that would close a cycle before every kept token
// is on the chain. kExact maximizes the sum of log entries over valid chains:
// a linear assignment solution is returned when it is already a single chain
// (and is then optimal); otherwise an exact subset DP is used for up to
// kMaxExactKept kept tokens, and cycle patching beyond that.
//
// `allowed` (optional, empty = everything allowed) forbids individual links.
// Throws InfeasibleError when no valid chain uses only allowed links.
PointerChain ExtractPermutation(const Eigen::MatrixXd& probabilities,
                                std::span<const Tag> tags,
                                ExtractMethod method = ExtractMethod::kGreedy,
                                const LinkMask& allowed = {});

inline constexpr std::size_t kMaxExactKept = 16;

// Per-row argmax over the columns of KEEP tokens and the end column. May
// contain collisions and cycles; provided for comparison with
// ExtractPermutation. Entry 0 is the sentinel row; rows of DELETE tokens get
// -1.
std::vector<int> RowArgmax(const Eigen::MatrixXd& probabilities,
                           std::span<const Tag> tags);

// The score layout's permutation matrix for a chain: entry (r, c) is 1 when
// row r points at column c.
Eigen::MatrixXd ChainToMatrix(const PointerChain& chain);

// Sum of log entries along the chain.
double ChainLogScore(const Eigen::MatrixXd& probabilities,
                     const PointerChain& chain);

struct DecodeOptions {
  SinkhornOptions sinkhorn;
  ExtractMethod method = ExtractMethod::kGreedy;
};

// Sinkhorn normalization followed by extraction. -inf scores are forbidden
// links.
PointerChain DecodePointer(const ScoreMatrix& scores, std::span<const Tag> tags,
                           const DecodeOptions& options = {});

}  // namespace edit5

#endif  // EDIT5_POINTER_H_
