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

// edit5: command-line front end.
//
//   edit5 build-dataset pairs.jsonl -o programs.jsonl
//   edit5 realize programs.jsonl
//   edit5 noise corpus.txt --seed 7 -o pretrain.jsonl
//   edit5 stats pairs.jsonl --per-example stats.tsv
//   edit5 latency --stats report.json
//   edit5 decode-pointer scores.json --tags DKKK
//
// Reports are JSON on stdout, diagnostics go to stderr. The exit status is 0
// only when no line failed.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "edit5/align.h"
#include "edit5/errors.h"
#include "edit5/json_io.h"
#include "edit5/latency.h"
#include "edit5/metrics.h"
#include "edit5/noise.h"
#include "edit5/pointer.h"
#include "edit5/realize.h"
#include "line_pipeline.h"

namespace edit5::tools {
namespace {

using nlohmann::json;

constexpr int kExitLineErrors = 1;
constexpr int kExitFatal = 2;

// Fatal, whole-command failure (unreadable file, bad flag value).
struct FatalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommonOptions {
  std::string input = "-";
  std::string output = "-";
  std::string tokenizer = "punct";
  int jobs = 1;
};

void AddCommon(CLI::App* cmd, CommonOptions& o, const char* input_help) {
  cmd->add_option("input", o.input, input_help)->capture_default_str();
  cmd->add_option("--tokenizer", o.tokenizer, "Tokenizer: whitespace or punct")
      ->check(CLI::IsMember({"whitespace", "punct", "punctuation"}))
      ->capture_default_str();
  cmd->add_option("--jobs,-j", o.jobs, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

// Owns a file stream, or borrows stdin/stdout for "-".
class Input {
 public:
  explicit Input(const std::string& path) {
    if (path == "-") return;
    file_ = std::make_unique<std::ifstream>(path, std::ios::binary);
    if (!*file_) throw FatalError("cannot open '" + path + "' for reading");
  }
  std::istream& get() { return file_ ? *file_ : std::cin; }

 private:
  std::unique_ptr<std::ifstream> file_;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path == "-") return;
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*file_) throw FatalError("cannot open '" + path + "' for writing");
  }
  std::ostream& get() { return file_ ? *file_ : std::cout; }
  bool is_stdout() const { return !file_; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

bool IsBlank(const std::string& s) {
  return s.find_first_not_of(" \t\r\n\f\v") == std::string::npos;
}

void LineError(const Line& line, const std::string& what) {
  std::cerr << "line " << line.number << ": " << what << "\n";
}

// Summary of a line-oriented conversion. It goes to stdout when the records
// were written to a file, and to stderr when the records occupy stdout.
void PrintSummary(const json& summary, const Output& out) {
  (out.is_stdout() ? std::cerr : std::cout) << summary.dump() << "\n";
}

std::pair<std::string, std::string> ReadPair(const std::string& text) {
  const json j = json::parse(text);
  if (!j.is_object() || !j.contains("source") || !j.contains("target") ||
      !j["source"].is_string() || !j["target"].is_string()) {
    throw ValidationError("expected an object with string \"source\" and \"target\"");
  }
  return {j["source"].get<std::string>(), j["target"].get<std::string>()};
}

// ---------------------------------------------------------------- build-dataset

struct BuildResult {
  std::string record;
  std::string error;
  bool round_trip_ok = true;
};

int BuildDataset(const CommonOptions& o) {
  const TokenizerMode mode = ParseTokenizerMode(o.tokenizer);
  Input in(o.input);
  Output out(o.output);
  std::size_t size = 0, errors = 0, failures = 0;
  ProcessLines<BuildResult>(
      in.get(), o.jobs,
      [&](const Line& line) {
        BuildResult r;
        if (IsBlank(line.text)) return r;
        try {
          const auto [source, target] = ReadPair(line.text);
          const EditProgram p = Align(source, target, mode);
          r.round_trip_ok = RealizeTokens(p) == Tokenize(target, mode).Strings();
          r.record = ProgramToJson(p).dump();
        } catch (const std::exception& e) {
          r.error = e.what();
        }
        return r;
      },
      [&](const Line& line, BuildResult& r) {
        if (!r.error.empty()) {
          ++errors;
          LineError(line, r.error);
          return;
        }
        if (r.record.empty()) return;
        ++size;
        if (!r.round_trip_ok) {
          ++failures;
          LineError(line, "program does not realize the target");
        }
        out.get() << r.record << "\n";
      });
  PrintSummary({{"size", size}, {"errors", errors}, {"round_trip_failures", failures}}, out);
  return errors == 0 && failures == 0 ? 0 : kExitLineErrors;
}

// ---------------------------------------------------------------------- realize

struct RealizeResult {
  std::string text;
  std::string error;
  bool skip = false;
};

int RealizeCommand(const CommonOptions& o, const std::string& format) {
  Input in(o.input);
  Output out(o.output);
  std::size_t errors = 0;
  ProcessLines<RealizeResult>(
      in.get(), o.jobs,
      [&](const Line& line) {
        RealizeResult r;
        if (IsBlank(line.text)) {
          r.skip = true;
          return r;
        }
        try {
          const EditProgram p = ProgramFromJson(json::parse(line.text));
          r.text = format == "decoder" ? DecoderStringToText(RenderDecoderString(p))
                                       : Realize(p);
        } catch (const std::exception& e) {
          r.error = e.what();
        }
        return r;
      },
      [&](const Line& line, RealizeResult& r) {
        if (r.skip) return;
        if (!r.error.empty()) {
          ++errors;
          LineError(line, r.error);
          return;
        }
        out.get() << r.text << "\n";
      });
  return errors == 0 ? 0 : kExitLineErrors;
}

// ------------------------------------------------------------------------ noise

struct NoiseOptions {
  NoiseConfig config;
  std::optional<std::uint64_t> seed;
  std::size_t reservoir = 10000;
};

int NoiseCommand(const CommonOptions& o, const NoiseOptions& n) {
  if (!n.seed) throw FatalError("noise requires --seed");
  NoiseConfig config = n.config;
  config.seed = *n.seed;
  config.Validate();
  const TokenizerMode mode = ParseTokenizerMode(o.tokenizer);

  // The whole corpus is read up front: the added-span pool is a reservoir
  // sample built in a deterministic first pass.
  std::stringstream corpus;
  {
    Input in(o.input);
    corpus << in.get().rdbuf();
  }
  TokenReservoir reservoir(n.reservoir, SentenceSeed(config.seed, ~std::uint64_t{0}));
  {
    std::string text;
    while (std::getline(corpus, text)) reservoir.Add(Tokenize(text, mode));
    corpus.clear();
    corpus.seekg(0);
  }
  const std::vector<std::string>& pool = reservoir.tokens();

  Output out(o.output);
  std::size_t size = 0, failures = 0;
  ProcessLines<BuildResult>(
      corpus, o.jobs,
      [&](const Line& line) {
        BuildResult r;
        if (IsBlank(line.text)) return r;
        const TokenSeq sentence = Tokenize(line.text, mode);
        NoiseRng rng(SentenceSeed(config.seed, line.number));
        const PretrainingExample ex = MakePretrainingExample(sentence, config, pool, rng);
        r.round_trip_ok = RealizeTokens(ex.program) == sentence.Strings();
        json j = ProgramToJson(ex.program);
        j["target"] = sentence.Joined();
        j["decoder"] = DecoderStringToText(RenderDecoderString(ex.program));
        r.record = j.dump();
        return r;
      },
      [&](const Line& line, BuildResult& r) {
        if (r.record.empty()) return;
        ++size;
        if (!r.round_trip_ok) {
          ++failures;
          LineError(line, "pre-training program does not realize the sentence");
        }
        out.get() << r.record << "\n";
      });
  PrintSummary({{"size", size}, {"round_trip_failures", failures}, {"seed", config.seed}}, out);
  return failures == 0 ? 0 : kExitLineErrors;
}

// ------------------------------------------------------------------------ stats

struct StatsResult {
  std::optional<PairStats> stats;
  std::string error;
};

json DeltaAgainst(const DatasetStats& s, const ReferenceStats& ref) {
  const double ter_percent = 100.0 * s.ter.ter;
  return json{
      {"name", ref.name},
      {"published",
       {{"mean_source_length", ref.mean_source_length},
        {"mean_target_length", ref.mean_target_length},
        {"mean_insertion_tokens", ref.mean_insertion_tokens},
        {"ter_percent", ref.ter},
        {"insertions", ref.insertions},
        {"deletions", ref.deletions},
        {"substitutions", ref.substitutions},
        {"shifts", ref.shifts}}},
      {"delta",
       {{"mean_source_length", s.mean_source_length - ref.mean_source_length},
        {"mean_target_length", s.mean_target_length - ref.mean_target_length},
        {"mean_insertion_tokens", s.mean_insertion_tokens - ref.mean_insertion_tokens},
        {"ter_percent", ter_percent - ref.ter},
        {"insertions", s.ter.insertions - ref.insertions},
        {"deletions", s.ter.deletions - ref.deletions},
        {"substitutions", s.ter.substitutions - ref.substitutions},
        {"shifts", s.ter.shifts - ref.shifts}}}};
}

std::optional<ReferenceStats> LookupReference(const std::string& name) {
  if (name.empty()) return std::nullopt;
  auto ref = FindReferenceStats(name);
  if (!ref) {
    throw FatalError("unknown reference '" + name +
                     "' (expected sentence-fusion, gec or decontextualization)");
  }
  return ref;
}

int StatsCommand(const CommonOptions& o, const std::string& per_example,
                 const std::string& reference, bool shifts) {
  const TokenizerMode mode = ParseTokenizerMode(o.tokenizer);
  const std::optional<ReferenceStats> ref = LookupReference(reference);
  TerOptions ter;
  ter.shifts = shifts;
  Input in(o.input);
  std::unique_ptr<Output> tsv;
  if (!per_example.empty()) {
    tsv = std::make_unique<Output>(per_example);
    tsv->get() << "line\tsource_length\ttarget_length\tinsertion_tokens\tter"
                  "\tinsertions\tdeletions\tsubstitutions\tshifts\tround_trip\n";
  }
  StatsAccumulator acc;
  std::size_t errors = 0, failures = 0;
  ProcessLines<StatsResult>(
      in.get(), o.jobs,
      [&](const Line& line) {
        StatsResult r;
        if (IsBlank(line.text)) return r;
        try {
          const auto [source, target] = ReadPair(line.text);
          r.stats = ComputePairStats(Tokenize(source, mode), Tokenize(target, mode), ter);
        } catch (const std::exception& e) {
          r.error = e.what();
        }
        return r;
      },
      [&](const Line& line, StatsResult& r) {
        if (!r.error.empty()) {
          ++errors;
          LineError(line, r.error);
          return;
        }
        if (!r.stats) return;
        const PairStats& p = *r.stats;
        acc.Add(p);
        if (!p.round_trip_ok) {
          ++failures;
          LineError(line, "program does not realize the target");
        }
        if (tsv) {
          const double ter_value =
              p.edits.reference_length == 0
                  ? 0.0
                  : static_cast<double>(p.edits.total()) /
                        static_cast<double>(p.edits.reference_length);
          tsv->get() << line.number << '\t' << p.source_length << '\t' << p.target_length
                     << '\t' << p.insertion_tokens << '\t' << ter_value << '\t'
                     << p.edits.insertions << '\t' << p.edits.deletions << '\t'
                     << p.edits.substitutions << '\t' << p.edits.shifts << '\t'
                     << (p.round_trip_ok ? "ok" : "FAIL") << '\n';
        }
      });
  if (acc.size() == 0) throw FatalError("no pairs to summarize");
  const DatasetStats stats = acc.Finish();
  json report = DatasetStatsToJson(stats);
  report["tokenizer"] = TokenizerModeName(mode);
  report["errors"] = errors;
  if (ref) report["reference"] = DeltaAgainst(stats, *ref);
  std::cout << report.dump(2) << "\n";
  return errors == 0 && failures == 0 ? 0 : kExitLineErrors;
}

// ---------------------------------------------------------------------- latency

struct LatencyOptions {
  std::string config;
  std::string stats;
  std::string reference;
  std::vector<double> lengths = {128, 512};
  double input_length = 128;
  std::string baseline = "seq2seq_12layer";
};

json KindReport(const LatencyModel& m, ModelKind kind, double length, double steps,
                ModelKind baseline, double baseline_steps) {
  return json{{"decoder_steps", steps},
              {"estimate_ms", Estimate(m, kind, length, steps)},
              {"decoder_encoder_ratio", DecoderEncoderRatio(m, kind, length, steps)},
              {"speedup_vs_baseline", Speedup(m, kind, steps, baseline, baseline_steps, length)}};
}

int LatencyCommand(const LatencyOptions& o) {
  LatencyModel model = LatencyModel::Defaults();
  if (!o.config.empty()) {
    Input in(o.config);
    model = LatencyModelFromJson(json::parse(in.get()));
  }
  const ModelKind baseline = ParseModelKind(o.baseline);
  json report;
  report["model"] = LatencyModelToJson(model);
  json table = json::array();
  for (double len : o.lengths) {
    if (model.Extrapolates(len)) {
      std::cerr << "warning: input length " << len
                << " is beyond the measured lengths; extrapolating linearly\n";
    }
    table.push_back({{"input_length", len},
                     {"overhead_ms", model.overhead_ms.At(len)},
                     {"per_step_1layer_ms", model.per_step_1layer_ms.At(len)},
                     {"break_even_steps", BreakEvenSteps(model, len)}});
  }
  report["break_even"] = std::move(table);

  std::optional<DatasetStats> stats;
  std::string name;
  if (!o.stats.empty()) {
    Input in(o.stats);
    stats = DatasetStatsFromJson(json::parse(in.get()));
    name = o.stats;
  } else if (const auto ref = LookupReference(o.reference)) {
    DatasetStats s;
    s.mean_source_length = ref->mean_source_length;
    s.mean_target_length = ref->mean_target_length;
    s.mean_insertion_tokens = ref->mean_insertion_tokens;
    stats = s;
    name = std::string(ref->name);
  }
  if (stats) {
    const double len = o.input_length;
    if (model.Extrapolates(len)) {
      std::cerr << "warning: input length " << len
                << " is beyond the measured lengths; extrapolating linearly\n";
    }
    const double seq_steps = stats->mean_target_length;
    const double edit_steps = stats->mean_insertion_tokens;
    const double base_steps = baseline == ModelKind::kEdit5 ? edit_steps : seq_steps;
    report["dataset"] = {
        {"name", name},
        {"input_length", len},
        {"baseline", ModelKindName(baseline)},
        {"seq2seq_1layer",
         KindReport(model, ModelKind::kSeq2Seq1Layer, len, seq_steps, baseline, base_steps)},
        {"seq2seq_12layer",
         KindReport(model, ModelKind::kSeq2Seq12Layer, len, seq_steps, baseline, base_steps)},
        {"edit5", KindReport(model, ModelKind::kEdit5, len, edit_steps, baseline, base_steps)},
        {"saved_steps", seq_steps - edit_steps},
        {"break_even_steps", BreakEvenSteps(model, len)}};
  }
  std::cout << report.dump(2) << "\n";
  return 0;
}

// --------------------------------------------------------------- decode-pointer

struct DecodeCliOptions {
  std::string input = "-";
  std::string format = "auto";
  std::string tags;
  std::string method = "greedy";
  int iterations = 20;
  double temperature = 1.0;
};

int DecodePointerCommand(const DecodeCliOptions& o) {
  Input in(o.input);
  std::istream& stream = in.get();
  std::string format = o.format;
  if (format == "auto") {
    stream >> std::ws;
    const int c = stream.peek();
    format = c == '[' || c == '{' ? "json" : "binary";
  }
  ScoreMatrix scores;
  std::string tag_text = o.tags;
  if (format == "json") {
    const json j = json::parse(stream);
    if (j.is_object()) {
      if (!j.contains("scores")) throw ParseError("expected a \"scores\" field", 0);
      scores = ScoreMatrixFromJson(j["scores"]);
      if (tag_text.empty() && j.contains("tags")) tag_text = j["tags"].get<std::string>();
    } else {
      scores = ScoreMatrixFromJson(j);
    }
  } else {
    scores = ReadScoreMatrixBinary(stream);
  }
  if (scores.rows() == 0) throw ValidationError("score matrix is empty");
  const std::size_t n = static_cast<std::size_t>(scores.rows()) - 1;
  const std::vector<Tag> tags =
      tag_text.empty() ? std::vector<Tag>(n, Tag::kKeep) : TagsFromString(tag_text);
  DecodeOptions opts;
  opts.sinkhorn.iterations = o.iterations;
  opts.sinkhorn.temperature = o.temperature;
  opts.method = ParseExtractMethod(o.method);
  const PointerChain chain = DecodePointer(scores, tags, opts);
  json report = ChainToJson(chain);
  report["tags"] = TagsToString(tags);
  report["method"] = o.method;
  std::cout << report.dump() << "\n";
  return 0;
}

}  // namespace
}  // namespace edit5::tools

int main(int argc, char** argv) {
  using namespace edit5;
  using namespace edit5::tools;
  CLI::App app{"Edit programs: dataset construction, realization, pointer decoding, "
               "pre-training noise, corpus statistics and latency estimates."};
  app.require_subcommand(1);

  CommonOptions build_opts;
  CLI::App* build = app.add_subcommand(
      "build-dataset", "Align source/target JSONL pairs into edit programs");
  AddCommon(build, build_opts, "JSONL with \"source\" and \"target\" (- for stdin)");
  build->add_option("-o,--output", build_opts.output, "Program JSONL output");

  CommonOptions realize_opts;
  std::string realize_format = "text";
  CLI::App* realize = app.add_subcommand("realize", "Apply edit programs to their sources");
  realize->add_option("input", realize_opts.input, "Program JSONL (- for stdin)");
  realize->add_option("--jobs,-j", realize_opts.jobs, "Worker threads")
      ->check(CLI::PositiveNumber);
  realize->add_option("-o,--output", realize_opts.output, "Text output, one line per program");
  realize->add_option("--format", realize_format, "text, or decoder for the position-token string")
      ->check(CLI::IsMember({"text", "decoder"}));

  CommonOptions noise_opts;
  NoiseOptions noise_cfg;
  CLI::App* noise = app.add_subcommand(
      "noise", "Corrupt a corpus and emit programs that restore each sentence");
  AddCommon(noise, noise_opts, "Plain text, one sentence per line (- for stdin)");
  noise->add_option("-o,--output", noise_opts.output, "Program JSONL output");
  noise->add_option("--seed", noise_cfg.seed, "Global seed (required)");
  noise->add_option("--drop-prob", noise_cfg.config.drop_prob, "Span drop probability per token")
      ->capture_default_str();
  noise->add_option("--swap-prob", noise_cfg.config.swap_prob, "Adjacent span swap probability")
      ->capture_default_str();
  noise->add_option("--add-prob", noise_cfg.config.add_prob, "Span addition probability per gap")
      ->capture_default_str();
  noise->add_option("--span-p", noise_cfg.config.span_p, "Geometric span length parameter")
      ->capture_default_str();
  noise->add_option("--reservoir", noise_cfg.reservoir, "Size of the added-token pool")
      ->capture_default_str();

  CommonOptions stats_opts;
  std::string per_example, stats_reference;
  bool no_shifts = false;
  CLI::App* stats = app.add_subcommand("stats", "Length, insertion and TER statistics of pairs");
  AddCommon(stats, stats_opts, "JSONL with \"source\" and \"target\" (- for stdin)");
  stats->add_option("--per-example", per_example, "Write per-pair statistics as TSV");
  stats->add_option("--reference", stats_reference,
                    "Compare with published numbers: sentence-fusion, gec, decontextualization");
  stats->add_flag("--no-shifts", no_shifts, "Plain edit distance instead of TER shifts");

  LatencyOptions latency_opts;
  CLI::App* latency = app.add_subcommand("latency", "Latency estimates and break-even steps");
  latency->add_option("--latency-config", latency_opts.config, "JSON latency constants");
  latency->add_option("--stats", latency_opts.stats, "Stats report from the stats command");
  latency->add_option("--reference", latency_opts.reference,
                      "Use published corpus statistics instead of --stats");
  latency->add_option("--lengths", latency_opts.lengths, "Input lengths for the break-even table")
      ->delimiter(',');
  latency->add_option("--input-length", latency_opts.input_length,
                      "Input length for the dataset report")
      ->capture_default_str();
  latency->add_option("--baseline", latency_opts.baseline, "Speedup baseline model")
      ->check(CLI::IsMember({"seq2seq_1layer", "seq2seq_12layer", "edit5"}))
      ->capture_default_str();

  DecodeCliOptions decode_opts;
  CLI::App* decode = app.add_subcommand(
      "decode-pointer", "Sinkhorn-normalize a score matrix and read off a pointer chain");
  decode->add_option("input", decode_opts.input, "Score matrix file (- for stdin)");
  decode->add_option("--format", decode_opts.format, "auto, json or binary")
      ->check(CLI::IsMember({"auto", "json", "binary"}));
  decode->add_option("--tags", decode_opts.tags, "Tags as K/D letters (default: all KEEP)");
  decode->add_option("--method", decode_opts.method, "greedy or exact")
      ->check(CLI::IsMember({"greedy", "exact"}));
  decode->add_option("--sinkhorn-iters", decode_opts.iterations, "Sinkhorn iterations")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  decode->add_option("--temperature", decode_opts.temperature, "Sinkhorn temperature")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    std::ios::sync_with_stdio(false);
    if (*build) return BuildDataset(build_opts);
    if (*realize) return RealizeCommand(realize_opts, realize_format);
    if (*noise) return NoiseCommand(noise_opts, noise_cfg);
    if (*stats) return StatsCommand(stats_opts, per_example, stats_reference, !no_shifts);
    if (*latency) return LatencyCommand(latency_opts);
    if (*decode) return DecodePointerCommand(decode_opts);
  } catch (const std::exception& e) {
    std::cerr << "edit5: " << e.what() << "\n";
    return kExitFatal;
  }
  return kExitFatal;
}
