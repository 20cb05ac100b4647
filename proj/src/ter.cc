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

#include "edit5/ter.h"

#include <algorithm>

#include "edit5/errors.h"

namespace edit5 {
namespace {

enum class Op : unsigned char { kMatch, kSub, kDel, kIns };

struct DpAlignment {
  std::size_t cost = 0;
  std::vector<Op> ops;  // hypothesis-to-reference, left to right
};

DpAlignment AlignDp(std::span<const std::string> hyp,
                    std::span<const std::string> ref) {
  const std::size_t n = hyp.size(), m = ref.size();
  std::vector<std::size_t> d((n + 1) * (m + 1));
  auto at = [m](std::size_t i, std::size_t j) { return i * (m + 1) + j; };
  for (std::size_t i = 0; i <= n; ++i) d[at(i, 0)] = i;
  for (std::size_t j = 0; j <= m; ++j) d[at(0, j)] = j;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      const std::size_t diag = d[at(i - 1, j - 1)] + (hyp[i - 1] == ref[j - 1] ? 0 : 1);
      d[at(i, j)] = std::min({diag, d[at(i - 1, j)] + 1, d[at(i, j - 1)] + 1});
    }
  }

  DpAlignment out;
  out.cost = d[at(n, m)];
  std::size_t i = n, j = m;
  // Backtrace preference: diagonal, then deletion, then insertion.
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0) {
      const bool same = hyp[i - 1] == ref[j - 1];
      if (d[at(i, j)] == d[at(i - 1, j - 1)] + (same ? 0 : 1)) {
        out.ops.push_back(same ? Op::kMatch : Op::kSub);
        --i;
        --j;
        continue;
      }
    }
    if (i > 0 && d[at(i, j)] == d[at(i - 1, j)] + 1) {
      out.ops.push_back(Op::kDel);
      --i;
    } else {
      out.ops.push_back(Op::kIns);
      --j;
    }
  }
  std::reverse(out.ops.begin(), out.ops.end());
  return out;
}

std::vector<std::string> ApplyShift(std::span<const std::string> words,
                                    std::size_t start, std::size_t length,
                                    std::size_t dest) {
  std::vector<std::string> rest;
  rest.reserve(words.size());
  rest.insert(rest.end(), words.begin(), words.begin() + start);
  rest.insert(rest.end(), words.begin() + start + length, words.end());
  rest.insert(rest.begin() + dest, words.begin() + start,
              words.begin() + start + length);
  return rest;
}

bool AnyOf(const std::vector<bool>& flags, std::size_t from, std::size_t len) {
  return std::any_of(flags.begin() + from, flags.begin() + from + len,
                     [](bool b) { return b; });
}

}  // namespace

EditCounts& EditCounts::operator+=(const EditCounts& other) {
  insertions += other.insertions;
  deletions += other.deletions;
  substitutions += other.substitutions;
  shifts += other.shifts;
  reference_length += other.reference_length;
  return *this;
}

std::size_t EditDistance(std::span<const std::string> hyp,
                         std::span<const std::string> ref) {
  return AlignDp(hyp, ref).cost;
}

EditCounts TerEdits(std::span<const std::string> hyp,
                    std::span<const std::string> ref,
                    const TerOptions& options) {
  std::vector<std::string> cur(hyp.begin(), hyp.end());
  EditCounts counts;
  counts.reference_length = ref.size();

  DpAlignment align = AlignDp(cur, ref);
  while (options.shifts && align.cost > 0) {
    // Hypothesis tokens the current alignment gets wrong.
    std::vector<bool> hyp_err(cur.size(), false);
    {
      std::size_t i = 0;
      for (Op op : align.ops) {
        if (op == Op::kIns) continue;
        hyp_err[i++] = op != Op::kMatch;
      }
    }

    std::size_t best_cost = align.cost;  // a shift must beat this net of its own cost
    std::vector<std::string> best;
    const std::size_t n = cur.size();
    for (std::size_t len = std::min(options.max_shift_size, n); len >= 1; --len) {
      for (std::size_t start = 0; start + len <= n; ++start) {
        if (options.prune_correct_blocks && !AnyOf(hyp_err, start, len)) continue;
        const std::size_t dest_lo = start > options.max_shift_distance
                                        ? start - options.max_shift_distance
                                        : 0;
        const std::size_t dest_hi =
            std::min(n - len, start + options.max_shift_distance);
        for (std::size_t dest = dest_lo; dest <= dest_hi; ++dest) {
          if (dest == start) continue;
          std::vector<std::string> shifted = ApplyShift(cur, start, len, dest);
          const std::size_t cost = EditDistance(shifted, ref) + 1;
          if (cost < best_cost) {
            best_cost = cost;
            best = std::move(shifted);
          }
        }
      }
    }
    if (best.empty()) break;
    cur = std::move(best);
    ++counts.shifts;
    align = AlignDp(cur, ref);
  }

  for (Op op : align.ops) {
    switch (op) {
      case Op::kMatch: break;
      case Op::kSub: ++counts.substitutions; break;
      case Op::kDel: ++counts.deletions; break;
      case Op::kIns: ++counts.insertions; break;
    }
  }
  return counts;
}

TerBreakdown Normalize(const EditCounts& edits) {
  if (edits.reference_length == 0) {
    throw ValidationError("TER is undefined for an empty reference");
  }
  const double len = static_cast<double>(edits.reference_length);
  TerBreakdown out;
  out.edits = edits;
  out.ter = static_cast<double>(edits.total()) / len;
  out.insertions = 100.0 * static_cast<double>(edits.insertions) / len;
  out.deletions = 100.0 * static_cast<double>(edits.deletions) / len;
  out.substitutions = 100.0 * static_cast<double>(edits.substitutions) / len;
  out.shifts = 100.0 * static_cast<double>(edits.shifts) / len;
  return out;
}

TerBreakdown Ter(std::span<const std::string> hyp,
                 std::span<const std::string> ref, const TerOptions& options) {
  if (ref.empty()) {
    throw ValidationError("TER is undefined for an empty reference");
  }
  return Normalize(TerEdits(hyp, ref, options));
}

}  // namespace edit5
