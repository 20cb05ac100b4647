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

#include "edit5/json_io.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <limits>
#include <string>
#include <vector>

#include "edit5/errors.h"

namespace edit5 {

using nlohmann::json;

json ProgramToJson(const EditProgram& program) {
  json tags = json::array();
  for (Tag t : program.tags()) tags.push_back(std::string(1, TagChar(t)));
  json insertions = json::array();
  for (const Insertion& ins : program.insertions()) {
    insertions.push_back({{"after", ins.after_pos}, {"span", ins.span}});
  }
  return json{{"source", program.source().Strings()},
              {"tags", std::move(tags)},
              {"order", program.order()},
              {"insertions", std::move(insertions)}};
}

EditProgram ProgramFromJson(const json& j) {
  try {
    if (!j.is_object()) throw ValidationError("program must be a JSON object");
    for (const char* key : {"source", "tags", "order", "insertions"}) {
      if (!j.contains(key)) {
        throw ValidationError(std::string("program is missing \"") + key + "\"");
      }
    }
    const auto source = j.at("source").get<std::vector<std::string>>();
    std::vector<Tag> tags;
    for (const json& t : j.at("tags")) tags.push_back(TagFromString(t.get<std::string>()));
    std::vector<std::size_t> order;
    for (const json& o : j.at("order")) {
      if (!o.is_number_unsigned()) {
        throw ValidationError("order entries must be non-negative integers");
      }
      order.push_back(o.get<std::size_t>());
    }
    std::vector<Insertion> insertions;
    for (const json& ins : j.at("insertions")) {
      if (!ins.at("after").is_number_unsigned()) {
        throw ValidationError("insertion \"after\" must be a non-negative integer");
      }
      insertions.push_back({ins.at("after").get<std::size_t>(),
                            ins.at("span").get<std::vector<std::string>>()});
    }
    return EditProgram::FromOrder(TokenSeq::FromTokens(source), std::move(tags),
                                  order, std::move(insertions));
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed program: ") + e.what());
  }
}

json ChainToJson(const PointerChain& chain) {
  return json{{"order", ChainToPermutation(chain)}, {"next", chain.links()}};
}

ScoreMatrix ScoreMatrixFromJson(const json& rows) {
  if (!rows.is_array()) throw ParseError("score matrix must be an array of rows", 0);
  const std::size_t n = rows.size();
  ScoreMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const json& row = rows[r];
    if (!row.is_array() || row.size() != n) {
      throw ParseError("score matrix row " + std::to_string(r) +
                           " must have " + std::to_string(n) + " entries",
                       r);
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (row[c].is_null()) {
        m(r, c) = -std::numeric_limits<double>::infinity();
      } else if (row[c].is_number()) {
        m(r, c) = row[c].get<double>();
      } else {
        throw ParseError("score matrix entry is not a number", r);
      }
    }
  }
  return m;
}

namespace {

template <typename T>
T FromLittleEndian(T value) {
  if constexpr (std::endian::native == std::endian::big) {
    unsigned char bytes[sizeof(T)];
    std::memcpy(bytes, &value, sizeof(T));
    std::reverse(bytes, bytes + sizeof(T));
    std::memcpy(&value, bytes, sizeof(T));
  }
  return value;
}

}  // namespace

ScoreMatrix ReadScoreMatrixBinary(std::istream& in) {
  std::uint32_t n = 0;
  if (!in.read(reinterpret_cast<char*>(&n), sizeof(n))) {
    throw ParseError("score file is missing its dimension header", 0);
  }
  n = FromLittleEndian(n);
  std::vector<float> values(static_cast<std::size_t>(n) * n);
  if (!in.read(reinterpret_cast<char*>(values.data()),
               static_cast<std::streamsize>(values.size() * sizeof(float)))) {
    throw ParseError("score file is truncated",
                     sizeof(n) + static_cast<std::size_t>(in.gcount()));
  }
  ScoreMatrix m(n, n);
  for (std::uint32_t r = 0; r < n; ++r) {
    for (std::uint32_t c = 0; c < n; ++c) {
      m(r, c) = FromLittleEndian(values[static_cast<std::size_t>(r) * n + c]);
    }
  }
  return m;
}

void WriteScoreMatrixBinary(const ScoreMatrix& scores, std::ostream& out) {
  if (scores.rows() != scores.cols()) {
    throw ValidationError("score matrix must be square");
  }
  const std::uint32_t n = FromLittleEndian(static_cast<std::uint32_t>(scores.rows()));
  out.write(reinterpret_cast<const char*>(&n), sizeof(n));
  for (Eigen::Index r = 0; r < scores.rows(); ++r) {
    for (Eigen::Index c = 0; c < scores.cols(); ++c) {
      const float v = FromLittleEndian(static_cast<float>(scores(r, c)));
      out.write(reinterpret_cast<const char*>(&v), sizeof(v));
    }
  }
}

namespace {

LatencyCurve CurveFromJson(const json& j, const char* name) {
  if (!j.is_object()) {
    throw ValidationError(std::string(name) + " must map input lengths to ms");
  }
  std::map<double, double> points;
  for (const auto& [key, value] : j.items()) {
    double len = 0;
    try {
      std::size_t used = 0;
      len = std::stod(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw ValidationError(std::string(name) + ": input length '" + key +
                            "' is not a number");
    }
    if (!value.is_number()) {
      throw ValidationError(std::string(name) + ": latency must be a number");
    }
    points[len] = value.get<double>();
  }
  return LatencyCurve(std::move(points));
}

json CurveToJson(const LatencyCurve& curve) {
  json out = json::object();
  for (const auto& [len, ms] : curve.points()) {
    const bool whole = std::floor(len) == len;
    out[whole ? std::to_string(static_cast<long long>(len)) : std::to_string(len)] = ms;
  }
  return out;
}

}  // namespace

LatencyModel LatencyModelFromJson(const json& j) {
  if (!j.is_object()) throw ValidationError("latency config must be an object");
  LatencyModel m = LatencyModel::Defaults();
  if (j.contains("encoder_ms")) m.encoder_ms = CurveFromJson(j["encoder_ms"], "encoder_ms");
  if (j.contains("overhead_ms")) m.overhead_ms = CurveFromJson(j["overhead_ms"], "overhead_ms");
  if (j.contains("per_step_1layer_ms")) {
    m.per_step_1layer_ms = CurveFromJson(j["per_step_1layer_ms"], "per_step_1layer_ms");
  }
  if (j.contains("per_step_12layer_ms")) {
    m.per_step_12layer_ms = CurveFromJson(j["per_step_12layer_ms"], "per_step_12layer_ms");
  }
  m.Validate();
  return m;
}

json LatencyModelToJson(const LatencyModel& model) {
  return json{{"encoder_ms", CurveToJson(model.encoder_ms)},
              {"overhead_ms", CurveToJson(model.overhead_ms)},
              {"per_step_1layer_ms", CurveToJson(model.per_step_1layer_ms)},
              {"per_step_12layer_ms", CurveToJson(model.per_step_12layer_ms)}};
}

json DatasetStatsToJson(const DatasetStats& stats) {
  const EditCounts& e = stats.ter.edits;
  return json{
      {"size", stats.size},
      {"mean_source_length", stats.mean_source_length},
      {"mean_target_length", stats.mean_target_length},
      {"mean_insertion_tokens", stats.mean_insertion_tokens},
      {"round_trip_failures", stats.round_trip_failures},
      {"ter",
       {{"ter", stats.ter.ter},
        {"insertions", stats.ter.insertions},
        {"deletions", stats.ter.deletions},
        {"substitutions", stats.ter.substitutions},
        {"shifts", stats.ter.shifts},
        {"edits",
         {{"insertions", e.insertions},
          {"deletions", e.deletions},
          {"substitutions", e.substitutions},
          {"shifts", e.shifts},
          {"reference_length", e.reference_length}}}}}};
}

DatasetStats DatasetStatsFromJson(const json& j) {
  try {
    DatasetStats s;
    s.size = j.at("size").get<std::size_t>();
    s.mean_source_length = j.at("mean_source_length").get<double>();
    s.mean_target_length = j.at("mean_target_length").get<double>();
    s.mean_insertion_tokens = j.at("mean_insertion_tokens").get<double>();
    s.round_trip_failures = j.value("round_trip_failures", std::size_t{0});
    if (j.contains("ter")) {
      const json& t = j.at("ter");
      s.ter.ter = t.at("ter").get<double>();
      s.ter.insertions = t.value("insertions", 0.0);
      s.ter.deletions = t.value("deletions", 0.0);
      s.ter.substitutions = t.value("substitutions", 0.0);
      s.ter.shifts = t.value("shifts", 0.0);
      if (t.contains("edits")) {
        const json& e = t.at("edits");
        s.ter.edits.insertions = e.value("insertions", std::size_t{0});
        s.ter.edits.deletions = e.value("deletions", std::size_t{0});
        s.ter.edits.substitutions = e.value("substitutions", std::size_t{0});
        s.ter.edits.shifts = e.value("shifts", std::size_t{0});
        s.ter.edits.reference_length = e.value("reference_length", std::size_t{0});
      }
    }
    return s;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed stats report: ") + e.what());
  }
}

}  // namespace edit5
