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

// Python bindings for the edit5 library.

#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <pybind11/eigen.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "edit5/align.h"
#include "edit5/errors.h"
#include "edit5/json_io.h"
#include "edit5/latency.h"
#include "edit5/metrics.h"
#include "edit5/noise.h"
#include "edit5/pointer.h"
#include "edit5/realize.h"
#include "edit5/ter.h"

namespace py = pybind11;

namespace edit5 {
namespace {

using SpanList = std::vector<std::pair<std::size_t, std::vector<std::string>>>;

std::vector<Insertion> ToInsertions(const SpanList& spans) {
  std::vector<Insertion> out;
  for (const auto& [after, span] : spans) out.push_back({after, span});
  return out;
}

SpanList FromInsertions(const std::vector<Insertion>& insertions) {
  SpanList out;
  for (const Insertion& ins : insertions) out.emplace_back(ins.after_pos, ins.span);
  return out;
}

EditProgram MakeProgram(const std::vector<std::string>& source, const std::string& tags,
                        const std::vector<std::size_t>& order, const SpanList& insertions) {
  return EditProgram::FromOrder(TokenSeq::FromTokens(source), TagsFromString(tags), order,
                                ToInsertions(insertions));
}

std::vector<Tag> TagsOrAllKeep(const std::optional<std::string>& tags, Eigen::Index rows) {
  if (tags) return TagsFromString(*tags);
  return std::vector<Tag>(rows > 0 ? static_cast<std::size_t>(rows - 1) : 0, Tag::kKeep);
}

LatencyModel ModelFrom(const std::optional<std::string>& config_json) {
  if (!config_json) return LatencyModel::Defaults();
  return LatencyModelFromJson(nlohmann::json::parse(*config_json));
}

py::dict TerDict(const TerBreakdown& t) {
  py::dict d;
  d["ter"] = t.ter;
  d["insertions"] = t.insertions;
  d["deletions"] = t.deletions;
  d["substitutions"] = t.substitutions;
  d["shifts"] = t.shifts;
  py::dict e;
  e["insertions"] = t.edits.insertions;
  e["deletions"] = t.edits.deletions;
  e["substitutions"] = t.edits.substitutions;
  e["shifts"] = t.edits.shifts;
  e["reference_length"] = t.edits.reference_length;
  d["edits"] = e;
  return d;
}

NoiseConfig MakeNoiseConfig(std::uint64_t seed, double drop, double swap, double add,
                            double span_p) {
  NoiseConfig c{.drop_prob = drop, .swap_prob = swap, .add_prob = add, .span_p = span_p,
                .seed = seed};
  c.Validate();
  return c;
}

}  // namespace
}  // namespace edit5

PYBIND11_MODULE(_edit5, m) {
  using namespace edit5;
  m.doc() = "Edit programs: alignment, realization, pointer decoding, noise, statistics, latency";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<CapacityError>(m, "CapacityError", PyExc_ValueError);
  py::register_exception<InfeasibleError>(m, "InfeasibleError", PyExc_RuntimeError);
  py::register_exception<NumericError>(m, "NumericError", PyExc_ValueError);

  m.attr("NUM_POSITION_TOKENS") = kNumPositionTokens;

  m.def(
      "tokenize",
      [](const std::string& text, const std::string& tokenizer) {
        return Tokenize(text, ParseTokenizerMode(tokenizer)).Strings();
      },
      py::arg("text"), py::arg("tokenizer") = "punct");

  py::class_<EditProgram>(m, "Program")
      .def(py::init(&MakeProgram), py::arg("source"), py::arg("tags"), py::arg("order"),
           py::arg("insertions") = SpanList{})
      .def_property_readonly("source",
                             [](const EditProgram& p) { return p.source().Strings(); })
      .def_property_readonly("tags", [](const EditProgram& p) { return TagsToString(p.tags()); })
      .def_property_readonly("order", &EditProgram::order)
      .def_property_readonly("chain", [](const EditProgram& p) { return p.chain().links(); })
      .def_property_readonly("insertions",
                             [](const EditProgram& p) { return FromInsertions(p.insertions()); })
      .def_property_readonly("kept_count", &EditProgram::kept_count)
      .def_property_readonly("inserted_token_count", &EditProgram::inserted_token_count)
      .def("kept_sequence", &KeptSequence)
      .def("realize", &Realize)
      .def("realize_tokens", &RealizeTokens)
      .def("decoder_string",
           [](const EditProgram& p) { return DecoderStringToText(RenderDecoderString(p)); })
      .def("to_json", [](const EditProgram& p) { return ProgramToJson(p).dump(); })
      .def_static("from_json",
                  [](const std::string& s) { return ProgramFromJson(nlohmann::json::parse(s)); })
      .def(py::self == py::self)
      .def("__repr__", [](const EditProgram& p) {
        return "Program(" + ProgramToJson(p).dump() + ")";
      });

  m.def(
      "align",
      [](const std::string& source, const std::string& target, const std::string& tokenizer) {
        return Align(source, target, ParseTokenizerMode(tokenizer));
      },
      py::arg("source"), py::arg("target"), py::arg("tokenizer") = "punct",
      "Minimal-insertion edit program turning source into target.");
  m.def("realize", &Realize, py::arg("program"));
  m.def(
      "parse_decoder_string",
      [](const std::string& text, const std::string& tags, const std::vector<std::size_t>& order,
         const std::vector<std::string>& source) {
        std::vector<Tag> t = TagsFromString(tags);
        PointerChain chain = PermutationToChain(order, t);
        return ParseDecoderString(DecoderStringFromText(text), std::move(t), std::move(chain),
                                  TokenSeq::FromTokens(source));
      },
      py::arg("text"), py::arg("tags"), py::arg("order"), py::arg("source"));

  m.def(
      "chain_to_permutation",
      [](const std::vector<int>& next) { return ChainToPermutation(PointerChain(next)); },
      py::arg("next"));
  m.def(
      "permutation_to_chain",
      [](const std::vector<std::size_t>& order, const std::string& tags) {
        return PermutationToChain(order, TagsFromString(tags)).links();
      },
      py::arg("order"), py::arg("tags"));

  m.def(
      "sinkhorn",
      [](const Eigen::MatrixXd& scores, int iterations, double temperature,
         const std::optional<std::string>& tags) {
        const SinkhornOptions opts{iterations, temperature};
        if (tags) return Sinkhorn(scores, TagsFromString(*tags), opts);
        return Sinkhorn(scores, opts);
      },
      py::arg("scores"), py::arg("iterations") = 20, py::arg("temperature") = 1.0,
      py::arg("tags") = py::none());
  m.def(
      "extract_permutation",
      [](const Eigen::MatrixXd& probabilities, const std::optional<std::string>& tags,
         const std::string& method) {
        return ChainToPermutation(ExtractPermutation(
            probabilities, TagsOrAllKeep(tags, probabilities.rows()), ParseExtractMethod(method)));
      },
      py::arg("probabilities"), py::arg("tags") = py::none(), py::arg("method") = "greedy");
  m.def(
      "decode_pointer",
      [](const Eigen::MatrixXd& scores, const std::optional<std::string>& tags, int iterations,
         double temperature, const std::string& method) {
        DecodeOptions opts;
        opts.sinkhorn = {iterations, temperature};
        opts.method = ParseExtractMethod(method);
        return ChainToPermutation(
            DecodePointer(scores, TagsOrAllKeep(tags, scores.rows()), opts));
      },
      py::arg("scores"), py::arg("tags") = py::none(), py::arg("iterations") = 20,
      py::arg("temperature") = 1.0, py::arg("method") = "greedy");

  m.def(
      "ter",
      [](const std::string& hypothesis, const std::string& reference, bool shifts,
         const std::string& tokenizer) {
        const TokenizerMode mode = ParseTokenizerMode(tokenizer);
        TerOptions opts;
        opts.shifts = shifts;
        return TerDict(
            Ter(Tokenize(hypothesis, mode).Strings(), Tokenize(reference, mode).Strings(), opts));
      },
      py::arg("hypothesis"), py::arg("reference"), py::arg("shifts") = true,
      py::arg("tokenizer") = "punct");
  m.def(
      "dataset_stats",
      [](const std::vector<std::pair<std::string, std::string>>& pairs,
         const std::string& tokenizer) {
        const DatasetStats s = ComputeDatasetStats(pairs, ParseTokenizerMode(tokenizer));
        py::dict d;
        d["size"] = s.size;
        d["mean_source_length"] = s.mean_source_length;
        d["mean_target_length"] = s.mean_target_length;
        d["mean_insertion_tokens"] = s.mean_insertion_tokens;
        d["round_trip_failures"] = s.round_trip_failures;
        d["ter"] = TerDict(s.ter);
        return d;
      },
      py::arg("pairs"), py::arg("tokenizer") = "punct");

  m.def(
      "corrupt",
      [](const std::string& sentence, std::uint64_t seed, double drop, double swap, double add,
         double span_p, const std::vector<std::string>& pool, const std::string& tokenizer) {
        NoiseRng rng(seed);
        return Corrupt(Tokenize(sentence, ParseTokenizerMode(tokenizer)),
                       MakeNoiseConfig(seed, drop, swap, add, span_p), pool, rng)
            .Joined();
      },
      py::arg("sentence"), py::arg("seed"), py::arg("drop_prob") = 0.15,
      py::arg("swap_prob") = 0.1, py::arg("add_prob") = 0.1, py::arg("span_p") = 0.5,
      py::arg("pool") = std::vector<std::string>{}, py::arg("tokenizer") = "punct");
  m.def(
      "make_pretraining_example",
      [](const std::string& sentence, std::uint64_t seed, double drop, double swap, double add,
         double span_p, const std::vector<std::string>& pool, const std::string& tokenizer) {
        NoiseRng rng(seed);
        PretrainingExample ex =
            MakePretrainingExample(Tokenize(sentence, ParseTokenizerMode(tokenizer)),
                                   MakeNoiseConfig(seed, drop, swap, add, span_p), pool, rng);
        return std::make_pair(ex.corrupted.Joined(), std::move(ex.program));
      },
      py::arg("sentence"), py::arg("seed"), py::arg("drop_prob") = 0.15,
      py::arg("swap_prob") = 0.1, py::arg("add_prob") = 0.1, py::arg("span_p") = 0.5,
      py::arg("pool") = std::vector<std::string>{}, py::arg("tokenizer") = "punct");
  m.def("sentence_seed", &SentenceSeed, py::arg("global_seed"), py::arg("line"));

  m.def(
      "estimate_latency",
      [](const std::string& kind, double input_length, double steps,
         const std::optional<std::string>& config) {
        return Estimate(ModelFrom(config), ParseModelKind(kind), input_length, steps);
      },
      py::arg("kind"), py::arg("input_length"), py::arg("decoder_steps"),
      py::arg("config") = py::none());
  m.def(
      "break_even_steps",
      [](double input_length, const std::optional<std::string>& config) {
        return BreakEvenSteps(ModelFrom(config), input_length);
      },
      py::arg("input_length"), py::arg("config") = py::none());
  m.def(
      "decoder_encoder_ratio",
      [](const std::string& kind, double input_length, double steps,
         const std::optional<std::string>& config) {
        return DecoderEncoderRatio(ModelFrom(config), ParseModelKind(kind), input_length, steps);
      },
      py::arg("kind"), py::arg("input_length"), py::arg("decoder_steps"),
      py::arg("config") = py::none());
}
