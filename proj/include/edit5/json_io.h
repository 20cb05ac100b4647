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

#ifndef EDIT5_JSON_IO_H_
#define EDIT5_JSON_IO_H_

#include <cstdint>
#include <istream>
#include <ostream>

#include "edit5/chain.h"
#include "edit5/latency.h"
#include "edit5/metrics.h"
#include "edit5/pointer.h"
#include "edit5/program.h"
#include "json.hpp"

namespace edit5 {

// {"source": [tokens], "tags": ["K"|"D"], "order": [kept source indices in
//  output order], "insertions": [{"after": int, "span": [tokens]}]}
nlohmann::json ProgramToJson(const EditProgram& program);

// Throws ValidationError for missing fields, wrong types, or programs that
// break an invariant.
EditProgram ProgramFromJson(const nlohmann::json& j);

// {"order": [...], "next": [...]} with next[0] the sentinel's link and -1 for
// deleted positions.
nlohmann::json ChainToJson(const PointerChain& chain);

// A score matrix is either a JSON array of rows or, in binary form, a
// little-endian uint32 dimension n followed by n*n little-endian float32
// values in row-major order. "-Infinity" is not valid JSON; forbidden links
// use null in the JSON form.
ScoreMatrix ScoreMatrixFromJson(const nlohmann::json& rows);
ScoreMatrix ReadScoreMatrixBinary(std::istream& in);
void WriteScoreMatrixBinary(const ScoreMatrix& scores, std::ostream& out);

// {"encoder_ms": {"128": 0.98, ...}, "overhead_ms": ..., "per_step_1layer_ms":
//  ..., "per_step_12layer_ms": ...}. Missing curves keep their defaults.
LatencyModel LatencyModelFromJson(const nlohmann::json& j);
nlohmann::json LatencyModelToJson(const LatencyModel& model);

nlohmann::json DatasetStatsToJson(const DatasetStats& stats);
DatasetStats DatasetStatsFromJson(const nlohmann::json& j);

}  // namespace edit5

#endif  // EDIT5_JSON_IO_H_
