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

#include "edit5/pointer.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <tuple>

#include "edit5/assignment.h"
#include "edit5/errors.h"

namespace edit5 {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void CheckScores(const ScoreMatrix& scores, const SinkhornOptions& options) {
  if (options.iterations < 0) {
    throw ValidationError("sinkhorn iterations must be >= 0");
  }
  if (!(options.temperature > 0.0) || !std::isfinite(options.temperature)) {
    throw ValidationError("sinkhorn temperature must be positive and finite");
  }
  for (Eigen::Index r = 0; r < scores.rows(); ++r) {
    for (Eigen::Index c = 0; c < scores.cols(); ++c) {
      const double v = scores(r, c);
      if (std::isnan(v) || v == std::numeric_limits<double>::infinity()) {
        throw NumericError("score (" + std::to_string(r) + ", " +
                           std::to_string(c) + ") is not finite");
      }
    }
  }
}

double LogSumExp(const auto& values) {
  const double m = values.maxCoeff();
  if (m == kNegInf) return kNegInf;
  return m + std::log((values.array() - m).exp().sum());
}

Eigen::MatrixXd SinkhornDirect(const Eigen::MatrixXd& logits, int iterations) {
  Eigen::MatrixXd s(logits.rows(), logits.cols());
  for (Eigen::Index r = 0; r < logits.rows(); ++r) {
    const double m = logits.row(r).maxCoeff();
    // Row shifts cancel in the first row normalization.
    s.row(r) = m == kNegInf ? Eigen::RowVectorXd::Zero(logits.cols())
                            : Eigen::RowVectorXd((logits.row(r).array() - m).exp());
  }
  for (int it = 0; it < iterations; ++it) {
    for (Eigen::Index r = 0; r < s.rows(); ++r) {
      const double sum = s.row(r).sum();
      if (sum > 0.0) s.row(r) /= sum;
    }
    for (Eigen::Index c = 0; c < s.cols(); ++c) {
      const double sum = s.col(c).sum();
      if (sum > 0.0) s.col(c) /= sum;
    }
  }
  return s;
}

Eigen::MatrixXd SinkhornLog(Eigen::MatrixXd log_s, int iterations) {
  for (int it = 0; it < iterations; ++it) {
    for (Eigen::Index r = 0; r < log_s.rows(); ++r) {
      const double lse = LogSumExp(log_s.row(r));
      if (lse != kNegInf) log_s.row(r).array() -= lse;
    }
    for (Eigen::Index c = 0; c < log_s.cols(); ++c) {
      const double lse = LogSumExp(log_s.col(c));
      if (lse != kNegInf) log_s.col(c).array() -= lse;
    }
  }
  return log_s.array().exp();
}

void CheckLayout(Eigen::Index rows, Eigen::Index cols, std::size_t source_size) {
  const auto expected = static_cast<Eigen::Index>(source_size + 1);
  if (rows != expected || cols != expected) {
    throw ValidationError("score matrix is " + std::to_string(rows) + "x" +
                          std::to_string(cols) + ", expected " +
                          std::to_string(expected) + "x" +
                          std::to_string(expected) + " for " +
                          std::to_string(source_size) + " source tokens");
  }
}

struct ActiveSet {
  std::vector<Eigen::Index> rows;
  std::vector<Eigen::Index> cols;
};

ActiveSet ActiveRowsAndCols(std::span<const Tag> tags) {
  ActiveSet active;
  active.rows.push_back(0);
  for (std::size_t i = 0; i < tags.size(); ++i) {
    if (tags[i] != Tag::kKeep) continue;
    active.rows.push_back(static_cast<Eigen::Index>(i + 1));
    active.cols.push_back(static_cast<Eigen::Index>(i));
  }
  active.cols.push_back(static_cast<Eigen::Index>(tags.size()));
  return active;
}

// The kept-token subproblem. Node 0 is the sentinel when pointing and the end
// of the chain when pointed at; node k >= 1 is the k-th kept token.
class ChainProblem {
 public:
  ChainProblem(const Eigen::MatrixXd& probabilities, std::span<const Tag> tags,
               const LinkMask& allowed)
      : source_size_(tags.size()) {
    CheckLayout(probabilities.rows(), probabilities.cols(), tags.size());
    if (allowed.size() != 0) {
      CheckLayout(allowed.rows(), allowed.cols(), tags.size());
    }
    for (std::size_t i = 0; i < tags.size(); ++i) {
      if (tags[i] == Tag::kKeep) kept_.push_back(i);
    }
    const int nodes = num_nodes();
    weight_.resize(nodes, nodes);
    allowed_.resize(nodes, nodes);
    for (int a = 0; a < nodes; ++a) {
      for (int b = 0; b < nodes; ++b) {
        const Eigen::Index r = Row(a), c = Col(b);
        const double w = probabilities(r, c);
        if (std::isnan(w)) {
          throw NumericError("probability (" + std::to_string(r) + ", " +
                             std::to_string(c) + ") is NaN");
        }
        weight_(a, b) = w;
        allowed_(a, b) = (a != b || nodes == 1) && std::isfinite(w) &&
                         (allowed.size() == 0 || allowed(r, c));
      }
    }
  }

  int num_nodes() const { return static_cast<int>(kept_.size()) + 1; }
  int kept() const { return static_cast<int>(kept_.size()); }
  double weight(int a, int b) const { return weight_(a, b); }
  bool allowed(int a, int b) const { return allowed_(a, b); }

  double LogWeight(int a, int b) const {
    if (!allowed_(a, b)) return kNegInf;
    // Clamp so that underflowed zeros still rank below every positive entry.
    return std::log(std::max(weight_(a, b), 1e-300));
  }

  // `succ[a]` is the node following node a.
  PointerChain ToChain(const std::vector<int>& succ) const {
    std::vector<int> next(source_size_ + 1, PointerChain::kNoLink);
    for (int a = 0; a < num_nodes(); ++a) next[Position(a)] = Position(succ[a]);
    return PointerChain(std::move(next));
  }

 private:
  Eigen::Index Row(int a) const {
    return a == 0 ? 0 : static_cast<Eigen::Index>(kept_[a - 1] + 1);
  }
  Eigen::Index Col(int b) const {
    return b == 0 ? static_cast<Eigen::Index>(source_size_)
                  : static_cast<Eigen::Index>(kept_[b - 1]);
  }
  int Position(int a) const {
    return a == 0 ? PointerChain::kSentinel : static_cast<int>(kept_[a - 1]) + 1;
  }

  std::size_t source_size_;
  std::vector<std::size_t> kept_;
  Eigen::MatrixXd weight_;
  LinkMask allowed_;
};

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int Find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void Union(int a, int b) { parent_[Find(a)] = Find(b); }

 private:
  std::vector<int> parent_;
};

// Number of cycles in a successor permutation.
int CountCycles(const std::vector<int>& succ) {
  std::vector<bool> seen(succ.size(), false);
  int cycles = 0;
  for (std::size_t start = 0; start < succ.size(); ++start) {
    if (seen[start]) continue;
    ++cycles;
    for (int a = static_cast<int>(start); !seen[a]; a = succ[a]) seen[a] = true;
  }
  return cycles;
}

std::vector<int> SubsetDp(const ChainProblem& p);

std::vector<int> Greedy(const ChainProblem& p) {
  const int nodes = p.num_nodes();
  const int kept = p.kept();
  std::vector<std::tuple<double, int, int>> candidates;
  candidates.reserve(static_cast<std::size_t>(nodes) * nodes);
  for (int a = 0; a < nodes; ++a) {
    for (int b = 0; b < nodes; ++b) {
      if (p.allowed(a, b)) candidates.emplace_back(p.weight(a, b), a, b);
    }
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const auto& x, const auto& y) {
                     return std::get<0>(x) > std::get<0>(y);
                   });

  std::vector<int> succ(nodes, -1);
  std::vector<bool> has_pred(nodes, false);
  DisjointSets fragments(nodes);
  int placed = 0;
  for (const auto& [w, a, b] : candidates) {
    if (succ[a] != -1 || has_pred[b]) continue;
    // Only the final link may close the cycle through the sentinel.
    if (fragments.Find(a) == fragments.Find(b) && placed != kept) continue;
    succ[a] = b;
    has_pred[b] = true;
    fragments.Union(a, b);
    if (++placed == nodes) break;
  }
  if (placed == nodes) return succ;
  if (kept <= static_cast<int>(kMaxExactKept)) return SubsetDp(p);
  throw InfeasibleError("greedy extraction found no valid chain under the mask");
}

std::vector<int> SubsetDp(const ChainProblem& p) {
  const int k = p.kept();
  if (k == 0) return {0};
  const std::size_t full = (std::size_t{1} << k) - 1;
  std::vector<double> best((full + 1) * k, kNegInf);
  std::vector<signed char> parent((full + 1) * k, -1);
  auto at = [k](std::size_t mask, int last) { return mask * k + last; };

  for (int j = 0; j < k; ++j) best[at(std::size_t{1} << j, j)] = p.LogWeight(0, j + 1);
  for (std::size_t mask = 1; mask <= full; ++mask) {
    for (int last = 0; last < k; ++last) {
      const double cur = best[at(mask, last)];
      if (!(mask >> last & 1) || cur == kNegInf) continue;
      for (int u = 0; u < k; ++u) {
        if (mask >> u & 1) continue;
        const double cand = cur + p.LogWeight(last + 1, u + 1);
        const std::size_t to = at(mask | std::size_t{1} << u, u);
        if (cand > best[to]) {
          best[to] = cand;
          parent[to] = static_cast<signed char>(last);
        }
      }
    }
  }
  double total = kNegInf;
  int last = -1;
  for (int j = 0; j < k; ++j) {
    const double cand = best[at(full, j)] + p.LogWeight(j + 1, 0);
    if (cand > total) {
      total = cand;
      last = j;
    }
  }
  if (last < 0) throw InfeasibleError("no valid chain exists under the mask");

  std::vector<int> succ(k + 1, -1);
  succ[last + 1] = 0;
  std::size_t mask = full;
  int node = last;
  while (true) {
    const int prev = parent[at(mask, node)];
    if (prev < 0) {
      succ[0] = node + 1;
      break;
    }
    succ[prev + 1] = node + 1;
    mask &= ~(std::size_t{1} << node);
    node = prev;
  }
  return succ;
}

// Merges the cycles of an assignment by exchanging successors, taking the
// exchange that loses the least log score each time.
std::vector<int> PatchCycles(const ChainProblem& p, std::vector<int> succ) {
  const int nodes = p.num_nodes();
  while (CountCycles(succ) > 1) {
    std::vector<int> cycle_of(nodes, -1);
    int id = 0;
    for (int s = 0; s < nodes; ++s) {
      if (cycle_of[s] != -1) continue;
      for (int a = s; cycle_of[a] == -1; a = succ[a]) cycle_of[a] = id;
      ++id;
    }
    double best_delta = kNegInf;
    int best_a = -1, best_b = -1;
    for (int a = 0; a < nodes; ++a) {
      for (int b = 0; b < nodes; ++b) {
        if (cycle_of[a] == cycle_of[b]) continue;
        const double delta = p.LogWeight(a, succ[b]) + p.LogWeight(b, succ[a]) -
                             p.LogWeight(a, succ[a]) - p.LogWeight(b, succ[b]);
        if (delta > best_delta) {
          best_delta = delta;
          best_a = a;
          best_b = b;
        }
      }
    }
    if (best_a < 0) throw InfeasibleError("cycle patching found no allowed exchange");
    std::swap(succ[best_a], succ[best_b]);
  }
  return succ;
}

std::vector<int> Exact(const ChainProblem& p) {
  const int nodes = p.num_nodes();
  if (nodes == 1) return {0};
  // Larger than any achievable sum of clamped log weights.
  constexpr double kForbidden = 1e12;
  Eigen::MatrixXd cost(nodes, nodes);
  for (int a = 0; a < nodes; ++a) {
    for (int b = 0; b < nodes; ++b) {
      cost(a, b) = p.allowed(a, b) ? -p.LogWeight(a, b) : kForbidden;
    }
  }
  std::vector<int> succ = SolveAssignment(cost);
  for (int a = 0; a < nodes; ++a) {
    if (!p.allowed(a, succ[a])) {
      throw InfeasibleError("no valid chain exists under the mask");
    }
  }
  if (CountCycles(succ) == 1) return succ;
  if (p.kept() <= static_cast<int>(kMaxExactKept)) return SubsetDp(p);
  return PatchCycles(p, std::move(succ));
}

}  // namespace

Eigen::MatrixXd Sinkhorn(const ScoreMatrix& scores,
                         const SinkhornOptions& options) {
  CheckScores(scores, options);
  const Eigen::MatrixXd logits = scores / options.temperature;
  if (options.iterations == 0) return logits.array().exp();
  double magnitude = 0.0;
  for (Eigen::Index i = 0; i < logits.size(); ++i) {
    const double v = logits.data()[i];
    if (std::isfinite(v)) magnitude = std::max(magnitude, std::abs(v));
  }
  if (magnitude > kLogDomainThreshold) {
    return SinkhornLog(logits, options.iterations);
  }
  return SinkhornDirect(logits, options.iterations);
}

Eigen::MatrixXd Sinkhorn(const ScoreMatrix& scores, std::span<const Tag> tags,
                         const SinkhornOptions& options) {
  CheckLayout(scores.rows(), scores.cols(), tags.size());
  const ActiveSet active = ActiveRowsAndCols(tags);
  const Eigen::MatrixXd sub = scores(active.rows, active.cols);
  const Eigen::MatrixXd normalized = Sinkhorn(sub, options);
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(scores.rows(), scores.cols());
  out(active.rows, active.cols) = normalized;
  return out;
}

ExtractMethod ParseExtractMethod(std::string_view name) {
  if (name == "greedy") return ExtractMethod::kGreedy;
  if (name == "exact") return ExtractMethod::kExact;
  throw ValidationError("unknown extraction method '" + std::string(name) +
                        "' (expected greedy or exact)");
}

PointerChain ExtractPermutation(const Eigen::MatrixXd& probabilities,
                                std::span<const Tag> tags, ExtractMethod method,
                                const LinkMask& allowed) {
  const ChainProblem problem(probabilities, tags, allowed);
  if (problem.kept() == 0) return problem.ToChain({0});
  std::vector<int> succ =
      method == ExtractMethod::kGreedy ? Greedy(problem) : Exact(problem);
  return problem.ToChain(succ);
}

std::vector<int> RowArgmax(const Eigen::MatrixXd& probabilities,
                           std::span<const Tag> tags) {
  CheckLayout(probabilities.rows(), probabilities.cols(), tags.size());
  const ActiveSet active = ActiveRowsAndCols(tags);
  std::vector<int> out(tags.size() + 1, -1);
  for (Eigen::Index r : active.rows) {
    Eigen::Index best = active.cols.front();
    for (Eigen::Index c : active.cols) {
      if (probabilities(r, c) > probabilities(r, best)) best = c;
    }
    out[r] = static_cast<int>(best);
  }
  return out;
}

Eigen::MatrixXd ChainToMatrix(const PointerChain& chain) {
  const auto n = static_cast<Eigen::Index>(chain.source_size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n + 1, n + 1);
  for (Eigen::Index p = 0; p <= n; ++p) {
    const int q = chain.next(p);
    if (q == PointerChain::kNoLink) continue;
    m(p, q == PointerChain::kSentinel ? n : q - 1) = 1.0;
  }
  return m;
}

double ChainLogScore(const Eigen::MatrixXd& probabilities,
                     const PointerChain& chain) {
  const auto n = static_cast<Eigen::Index>(chain.source_size());
  CheckLayout(probabilities.rows(), probabilities.cols(), chain.source_size());
  double total = 0.0;
  for (Eigen::Index p = 0; p <= n; ++p) {
    const int q = chain.next(p);
    if (q == PointerChain::kNoLink) continue;
    total += std::log(probabilities(p, q == PointerChain::kSentinel ? n : q - 1));
  }
  return total;
}

PointerChain DecodePointer(const ScoreMatrix& scores, std::span<const Tag> tags,
                           const DecodeOptions& options) {
  CheckLayout(scores.rows(), scores.cols(), tags.size());
  CheckScores(scores, options.sinkhorn);
  const LinkMask allowed = scores.array().isFinite();
  const Eigen::MatrixXd probabilities = Sinkhorn(scores, tags, options.sinkhorn);
  return ExtractPermutation(probabilities, tags, options.method, allowed);
}

}  // namespace edit5
