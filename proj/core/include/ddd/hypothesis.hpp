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

#ifndef DDDEPTH_HYPOTHESIS_HPP
#define DDDEPTH_HYPOTHESIS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ddd/data_matrix.hpp"
#include "ddd/depth.hpp"
#include "ddd/distributions.hpp"

namespace ddd {

// Depth-based Kolmogorov-Smirnov and Cramer-von Mises statistics. Writing
// DDD(x) for the difference of two depth functions at x:
//   goodness of fit: KS  = sqrt(n)   max_x |D_X(x) - D_F0(x)|
//                    CvM = n (1/M) sum_j DDD(x_j)^2 over M draws x_j ~ F0
//   two-sample:      KS  = sqrt(n+m) max_x |D_X(x) - D_Y(x)|
//                    CvM = sum over pooled points of DDD^2
// The KS max runs over a finite evaluation grid; the reference depth D_F0
// is the empirical depth of a large Monte Carlo sample from F0.

enum class StatisticKind { kKS, kCvM };

/// Where the KS statistic takes its maximum: points drawn uniformly on the
/// unit sphere boundary (natural for standardized data), or the observed /
/// pooled data points themselves.
enum class EvalGrid { kSphere, kPooled };

std::string to_string(StatisticKind kind);
std::string to_string(EvalGrid grid);

struct GofSpec {
  ReferenceDistribution null_dist;
  StatisticKind statistic = StatisticKind::kKS;
  std::size_t eval_count = 2000;  // M: sphere points / null draws
  std::size_t bootstrap = 200;    // B
  std::size_t ref_size = 2000;    // n_ref for the plug-in reference depth
  DepthConfig depth;
  EvalGrid grid = EvalGrid::kSphere;
  /// Estimate-and-whiten workflow: standardize the data before testing and
  /// standardize every bootstrap replicate with its own estimates.
  bool plugin_standardize = false;
  /// Use (1 + count)/(1 + B) instead of count/B for the p-value.
  bool corrected_pvalue = false;
  std::uint64_t seed = 0;
};

struct TwoSampleSpec {
  StatisticKind statistic = StatisticKind::kKS;
  std::size_t eval_count = 2000;
  std::size_t bootstrap = 200;
  DepthConfig depth;
  /// Pooled by default: two-sample data are not standardized, so a fixed
  /// unit sphere can miss the samples entirely.
  EvalGrid grid = EvalGrid::kPooled;
  bool corrected_pvalue = false;
  std::uint64_t seed = 0;
};

struct TestResult {
  StatisticKind statistic;
  double statistic_value;
  /// Fraction of bootstrap replicates strictly above the observed value
  /// (or the corrected variant when requested); times B it is an integer.
  double p_value;
  std::vector<double> replicates;
  std::uint64_t seed;
  // Configuration echo for result documents.
  std::size_t eval_count;
  std::size_t bootstrap;
  std::size_t ref_size;  // 0 for two-sample tests
  EvalGrid grid;
  DepthMethod method;
  bool standardized;
};

// Plain statistic evaluations (no bootstrap). `eval_points` is the KS grid
// or the CvM integration sample; `ref_sample` realizes the null depth.
double gof_ks_statistic(const DataMatrix& x, const DataMatrix& eval_points,
                        const DataMatrix& ref_sample, const DepthConfig& depth_config = {});
double gof_cvm_statistic(const DataMatrix& x, const DataMatrix& eval_points,
                         const DataMatrix& ref_sample, const DepthConfig& depth_config = {});
double twosample_ks_statistic(const DataMatrix& x, const DataMatrix& y,
                              const DataMatrix& eval_points,
                              const DepthConfig& depth_config = {});
double twosample_cvm_statistic(const DataMatrix& x, const DataMatrix& y,
                               const DepthConfig& depth_config = {});

/// Bootstrap goodness-of-fit test (null draws, fixed grids across
/// replicates, strict-inequality p-value).
TestResult gof_test(const DataMatrix& x, const GofSpec& spec);

/// Bootstrap two-sample test (pooled resampling into first-n / last-m).
TestResult twosample_test(const DataMatrix& x, const DataMatrix& y, const TwoSampleSpec& spec);

/// Both statistics computed from one set of draws and bootstrap
/// replicates; the Monte Carlo harness uses this to price a table cell at
/// the cost of a single bootstrap pass.
struct TestBattery {
  std::optional<TestResult> ks;
  std::optional<TestResult> cvm;
};

TestBattery gof_test_battery(const DataMatrix& x, const GofSpec& spec, bool want_ks,
                             bool want_cvm);
TestBattery twosample_test_battery(const DataMatrix& x, const DataMatrix& y,
                                   const TwoSampleSpec& spec, bool want_ks, bool want_cvm);

}  // namespace ddd

#endif  // DDDEPTH_HYPOTHESIS_HPP
