// Copyright 2026 The dddepth authors.
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

#ifndef DDDEPTH_SIMULATION_HPP
#define DDDEPTH_SIMULATION_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "ddd/distributions.hpp"
#include "ddd/hypothesis.hpp"

namespace ddd {

// Monte Carlo size/power studies. One cell = one (model, d, n[, m]) and a
// set of statistics; the estimate is the observed rejection frequency of
// the level-alpha bootstrap test over independent repeats.

/// Goodness-of-fit study models, all tested against the standard d-variate
/// normal null:
///   kA1 standard normal (size)        kA2 0.8 N(0,I) + 0.2 N(5*1, I)
///   kA3 0.8 N(0,I) + 0.2 N(0, CS(.5)) kA4 t with 3 degrees of freedom
///   kA5 standard Cauchy               kA6 standard Laplace
enum class GofModel { kA1, kA2, kA3, kA4, kA5, kA6 };

/// Two-sample location model: first sample N(0, I), second N(mu * 1, I).
struct ShiftModel {
  double mu = 0.0;
};

/// Local alternative for the goodness-of-fit problem: data follow
/// (1 - gamma/sqrt(n)) F0 + (gamma/sqrt(n)) H, tested against F0.
struct ContiguousGofModel {
  double gamma;
  ReferenceDistribution f0;
  ReferenceDistribution h;
};

/// Local alternative for the two-sample problem: x ~ F and
/// y ~ (1 - gamma/sqrt(n+m)) F + (gamma/sqrt(n+m)) H.
struct ContiguousTwoSampleModel {
  double gamma;
  ReferenceDistribution f;
  ReferenceDistribution h;
};

using ModelSpec = std::variant<GofModel, ShiftModel, ContiguousGofModel, ContiguousTwoSampleModel>;

struct ExperimentSpec {
  ModelSpec model = GofModel::kA1;
  std::size_t d = 2;
  std::size_t n = 100;
  std::size_t m = 0;  // second-sample size; two-sample cells only
  double alpha = 0.05;
  std::size_t reps = 200;
  std::size_t bootstrap = 200;
  std::size_t eval_count = 2000;
  std::size_t ref_size = 2000;
  DepthConfig depth;
  /// Unset: the per-test default (sphere for goodness-of-fit cells, pooled
  /// for two-sample cells).
  std::optional<EvalGrid> grid;
  /// Estimate-and-whiten before testing. Unset: model A cells standardize
  /// (the composite-null workflow those power figures need), contiguous
  /// cells test the exactly specified simple null.
  std::optional<bool> plugin_standardize;
  std::vector<StatisticKind> statistics{StatisticKind::kKS, StatisticKind::kCvM};
  std::uint64_t seed = 0;
};

struct PowerEstimate {
  std::string model;
  std::size_t d = 0;
  std::size_t n = 0;
  std::size_t m = 0;  // 0 for one-sample cells
  StatisticKind statistic = StatisticKind::kKS;
  double alpha = 0.0;
  double rejection_rate = 0.0;
  double mc_std_error = 0.0;  // sqrt(rate (1-rate) / reps)
  std::size_t reps = 0;
};

std::string model_label(const ModelSpec& model);

/// Distribution generating one observation of the cell's data (exposed for
/// tests; also what the CLI's model names resolve to).
ReferenceDistribution gof_model_distribution(GofModel model, std::size_t d);

/// Rejection frequency of the goodness-of-fit test for each requested
/// statistic. Repeats run in parallel on derived streams; the estimate is
/// a pure function of the spec.
std::vector<PowerEstimate> run_gof_cell(const ExperimentSpec& spec);

/// Two-sample analogue; spec.m must be positive.
std::vector<PowerEstimate> run_twosample_cell(const ExperimentSpec& spec);

/// Power along a gamma grid of contiguous alternatives, one-sample when
/// `m` is absent, two-sample otherwise. Cell i runs on the seed ladder
/// derived from (spec.seed, i), so the whole curve is reproducible.
std::vector<std::pair<double, std::vector<PowerEstimate>>> run_local_power_curve(
    std::span<const double> gamma_grid, const ReferenceDistribution& f0,
    const ReferenceDistribution& h, const ExperimentSpec& base,
    std::optional<std::size_t> m = std::nullopt);

/// Fixed-width text table of estimates, ordered by (model, d, n, m,
/// statistic). Identical cells are a caller error.
std::string render_table(std::span<const PowerEstimate> cells);

/// Same rows as CSV.
std::string render_table_csv(std::span<const PowerEstimate> cells);

}  // namespace ddd

#endif  // DDDEPTH_SIMULATION_HPP
