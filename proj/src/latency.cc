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

#include "edit5/latency.h"

#include <cmath>
#include <iterator>
#include <string>

#include "edit5/errors.h"

namespace edit5 {

LatencyCurve::LatencyCurve(std::map<double, double> points)
    : points_(std::move(points)) {}

double LatencyCurve::At(double input_length) const {
  if (points_.empty()) throw ValidationError("latency curve has no points");
  auto hi = points_.lower_bound(input_length);
  if (hi == points_.begin()) return hi->second;
  if (hi != points_.end() && hi->first == input_length) return hi->second;
  if (points_.size() == 1) return points_.begin()->second;
  if (hi == points_.end()) --hi;  // extrapolate along the last segment
  auto lo = std::prev(hi);
  const double t = (input_length - lo->first) / (hi->first - lo->first);
  return lo->second + t * (hi->second - lo->second);
}

bool LatencyCurve::Extrapolates(double input_length) const {
  return !points_.empty() && input_length > points_.rbegin()->first;
}

ModelKind ParseModelKind(std::string_view name) {
  if (name == "seq2seq_1layer") return ModelKind::kSeq2Seq1Layer;
  if (name == "seq2seq_12layer") return ModelKind::kSeq2Seq12Layer;
  if (name == "edit5") return ModelKind::kEdit5;
  throw ValidationError("unknown model kind '" + std::string(name) + "'");
}

std::string_view ModelKindName(ModelKind kind) {
  switch (kind) {
    case ModelKind::kSeq2Seq1Layer: return "seq2seq_1layer";
    case ModelKind::kSeq2Seq12Layer: return "seq2seq_12layer";
    case ModelKind::kEdit5: return "edit5";
  }
  return "";
}

LatencyModel LatencyModel::Defaults() {
  LatencyModel m;
  m.encoder_ms = LatencyCurve({{128, 0.98}, {512, 2.65}});
  m.overhead_ms = LatencyCurve({{128, 0.49}, {512, 1.16}});
  m.per_step_1layer_ms = LatencyCurve({{128, 0.15}, {512, 0.17}});
  m.per_step_12layer_ms = LatencyCurve({{128, 1.26}, {512, 1.47}});
  return m;
}

void LatencyModel::Validate() const {
  auto check = [](const LatencyCurve& curve, const char* name, bool allow_zero) {
    if (curve.points().empty()) {
      throw ValidationError(std::string(name) + " has no points");
    }
    for (const auto& [len, ms] : curve.points()) {
      if (!(len > 0) || !std::isfinite(ms) || ms < 0 || (!allow_zero && ms == 0)) {
        throw ValidationError(std::string(name) + " has an invalid point at " +
                              std::to_string(len));
      }
    }
  };
  check(encoder_ms, "encoder_ms", false);
  check(overhead_ms, "overhead_ms", true);
  check(per_step_1layer_ms, "per_step_1layer_ms", false);
  check(per_step_12layer_ms, "per_step_12layer_ms", false);
}

bool LatencyModel::Extrapolates(double input_length) const {
  return encoder_ms.Extrapolates(input_length) ||
         overhead_ms.Extrapolates(input_length) ||
         per_step_1layer_ms.Extrapolates(input_length) ||
         per_step_12layer_ms.Extrapolates(input_length);
}

namespace {

double PerStep(const LatencyModel& model, ModelKind kind, double input_length) {
  return kind == ModelKind::kSeq2Seq12Layer
             ? model.per_step_12layer_ms.At(input_length)
             : model.per_step_1layer_ms.At(input_length);
}

}  // namespace

double Estimate(const LatencyModel& model, ModelKind kind, double input_length,
                double decoder_steps) {
  if (!(decoder_steps >= 0)) {
    throw ValidationError("decoder steps must be non-negative");
  }
  double ms = model.encoder_ms.At(input_length) +
              decoder_steps * PerStep(model, kind, input_length);
  if (kind == ModelKind::kEdit5) ms += model.overhead_ms.At(input_length);
  return ms;
}

int BreakEvenSteps(const LatencyModel& model, double input_length) {
  const double overhead = model.overhead_ms.At(input_length);
  const double step = model.per_step_1layer_ms.At(input_length);
  int s = static_cast<int>(std::floor(overhead / step)) + 1;
  // Settle rounding at exact multiples.
  while (s > 1 && (s - 1) * step > overhead) --s;
  while (s * step <= overhead) ++s;
  return s;
}

double DecoderEncoderRatio(const LatencyModel& model, ModelKind kind,
                           double input_length, double decoder_steps) {
  if (!(decoder_steps >= 0)) {
    throw ValidationError("decoder steps must be non-negative");
  }
  return decoder_steps * PerStep(model, kind, input_length) /
         model.encoder_ms.At(input_length);
}

double Speedup(const LatencyModel& model, ModelKind kind, double model_steps,
               ModelKind baseline, double baseline_steps, double input_length) {
  return Estimate(model, baseline, input_length, baseline_steps) /
         Estimate(model, kind, input_length, model_steps);
}

}  // namespace edit5
