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

#ifndef EDIT5_LATENCY_H_
#define EDIT5_LATENCY_H_

#include <map>
#include <string_view>

namespace edit5 {

// Component latency as a function of input length, linear between measured
// lengths, clamped below the shortest and extrapolated above the longest.
class LatencyCurve {
 public:
  LatencyCurve() = default;
  explicit LatencyCurve(std::map<double, double> points);

  double At(double input_length) const;
  bool Extrapolates(double input_length) const;
  const std::map<double, double>& points() const { return points_; }

 private:
  std::map<double, double> points_;
};

enum class ModelKind { kSeq2Seq1Layer, kSeq2Seq12Layer, kEdit5 };

ModelKind ParseModelKind(std::string_view name);
std::string_view ModelKindName(ModelKind kind);

// Milliseconds per component. The encoder includes the input embedding; the
// overhead covers pointer realization and the extra encoder layers, measured
// in the worst case where nothing is deleted and nothing is padding.
struct LatencyModel {
  LatencyCurve encoder_ms;
  LatencyCurve overhead_ms;
  LatencyCurve per_step_1layer_ms;
  LatencyCurve per_step_12layer_ms;

  // Base-size component measurements at input lengths 128 and 512.
  static LatencyModel Defaults();

  // Throws ValidationError unless the curves are non-empty, latencies are
  // positive, and the overhead is non-negative.
  void Validate() const;

  bool Extrapolates(double input_length) const;
};

// seq2seq: encoder + steps * per_step; edit5: encoder + overhead +
// steps * per_step_1layer. Decoder cost is linear in steps. Throws
// ValidationError for negative steps.
double Estimate(const LatencyModel& model, ModelKind kind, double input_length,
                double decoder_steps);

// Smallest whole number of decoder steps s with
// s * per_step_1layer > overhead at this input length.
int BreakEvenSteps(const LatencyModel& model, double input_length);

// Time in the decoder over time in the encoder.
double DecoderEncoderRatio(const LatencyModel& model, ModelKind kind,
                           double input_length, double decoder_steps);

// baseline latency / model latency.
double Speedup(const LatencyModel& model, ModelKind kind, double model_steps,
               ModelKind baseline, double baseline_steps, double input_length);

}  // namespace edit5

#endif  // EDIT5_LATENCY_H_
