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

#include "ddd/hypothesis.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "ddd/error.hpp"
#include "ddd/parallel.hpp"
#include "ddd/standardize.hpp"

namespace ddd {

namespace {

// Stream tags for the independent draw streams of one test.
constexpr std::uint64_t kStreamSphereGrid = 1;
constexpr std::uint64_t kStreamNullDraws = 2;
constexpr std::uint64_t kStreamReference = 3;
constexpr std::uint64_t kStreamBootstrap = 4;
constexpr std::uint64_t kStreamDirections = 5;

DataMatrix directions_as_points(const DirectionSet& dirs) {
  return DataMatrix(dirs.count, dirs.dimension, std::vector<double>(dirs.values));
}

double pvalue_from_counts(std::size_t exceed, std::size_t total, bool corrected) {
  if (corrected) {
    return static_cast<double>(1 + exceed) / static_cast<double>(1 + total);
  }
  return static_cast<double>(exceed) / static_cast<double>(total);
}

double ks_from_profiles(std::span<const double> a, std::span<const double> b, double scale) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(a[i] - b[i]));
  }
  return scale * worst;
}

double cvm_from_profiles(std::span<const double> a, std::span<const double> b, double factor) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double diff = a[i] - b[i];
    sum += diff * diff;
  }
  return factor * sum;
}

void check_common(std::size_t eval_count, std::size_t bootstrap) {
  if (eval_count == 0) throw ParameterError("test requires an evaluation count M >= 1");
  if (bootstrap == 0) throw ParameterError("test requires bootstrap replicates B >= 1");
}

}  // namespace

std::string to_string(StatisticKind kind) {
  return kind == StatisticKind::kKS ? "ks" : "cvm";
}

std::string to_string(EvalGrid grid) { return grid == EvalGrid::kSphere ? "sphere" : "pooled"; }

double gof_ks_statistic(const DataMatrix& x, const DataMatrix& eval_points,
                        const DataMatrix& ref_sample, const DepthConfig& depth_config) {
  if (eval_points.cols() != x.cols() || ref_sample.cols() != x.cols()) {
    throw ShapeError("gof_ks_statistic: dimension mismatch");
  }
  Rng rng(0, 0);
  DepthEvaluator eval(x.cols(), depth_config, rng);
  std::vector<double> dx = eval.profile(x, eval_points);
  std::vector<double> dref = eval.profile(ref_sample, eval_points);
  return ks_from_profiles(dx, dref, std::sqrt(static_cast<double>(x.rows())));
}

double gof_cvm_statistic(const DataMatrix& x, const DataMatrix& eval_points,
                         const DataMatrix& ref_sample, const DepthConfig& depth_config) {
  if (eval_points.cols() != x.cols() || ref_sample.cols() != x.cols()) {
    throw ShapeError("gof_cvm_statistic: dimension mismatch");
  }
  Rng rng(0, 0);
  DepthEvaluator eval(x.cols(), depth_config, rng);
  std::vector<double> dx = eval.profile(x, eval_points);
  std::vector<double> dref = eval.profile(ref_sample, eval_points);
  double factor = static_cast<double>(x.rows()) / static_cast<double>(eval_points.rows());
  return cvm_from_profiles(dx, dref, factor);
}

double twosample_ks_statistic(const DataMatrix& x, const DataMatrix& y,
                              const DataMatrix& eval_points, const DepthConfig& depth_config) {
  if (x.cols() != y.cols() || eval_points.cols() != x.cols()) {
    throw ShapeError("twosample_ks_statistic: dimension mismatch");
  }
  Rng rng(0, 0);
  DepthEvaluator eval(x.cols(), depth_config, rng);
  std::vector<double> dx = eval.profile(x, eval_points);
  std::vector<double> dy = eval.profile(y, eval_points);
  return ks_from_profiles(dx, dy, std::sqrt(static_cast<double>(x.rows() + y.rows())));
}

double twosample_cvm_statistic(const DataMatrix& x, const DataMatrix& y,
                               const DepthConfig& depth_config) {
  if (x.cols() != y.cols()) throw ShapeError("twosample_cvm_statistic: dimension mismatch");
  Rng rng(0, 0);
  DepthEvaluator eval(x.cols(), depth_config, rng);
  DataMatrix pooled = x.concat_rows(y);
  std::vector<double> dx = eval.profile(x, pooled);
  std::vector<double> dy = eval.profile(y, pooled);
  return cvm_from_profiles(dx, dy, 1.0);
}

TestBattery gof_test_battery(const DataMatrix& x, const GofSpec& spec, bool want_ks,
                             bool want_cvm) {
  if (!want_ks && !want_cvm) throw ParameterError("no statistic requested");
  check_common(spec.eval_count, spec.bootstrap);
  if (x.cols() != spec.null_dist.dimension()) {
    throw ShapeError("data dimension does not match the null distribution");
  }
  const bool empirical_null = spec.null_dist.empirical_rows() != nullptr;
  if (spec.ref_size == 0 && !empirical_null) {
    throw ParameterError("gof test requires a reference size n_ref >= 1");
  }

  const std::size_t n = x.rows();
  const std::size_t d = x.cols();
  const double sqrt_n = std::sqrt(static_cast<double>(n));
  Rng root(spec.seed);

  DataMatrix data = spec.plugin_standardize ? standardize(x).first : x;

  Rng dir_rng = root.child(kStreamDirections);
  DepthEvaluator eval(d, spec.depth, dir_rng);

  // Draws fixed for the whole test, shared by every bootstrap replicate.
  std::optional<DataMatrix> ks_grid;
  if (want_ks) {
    if (spec.grid == EvalGrid::kSphere) {
      Rng grid_rng = root.child(kStreamSphereGrid);
      ks_grid = directions_as_points(sample_unit_sphere(d, spec.eval_count, grid_rng));
    } else {
      ks_grid = data;
    }
  }
  std::optional<DataMatrix> cvm_grid;
  if (want_cvm) {
    Rng null_rng = root.child(kStreamNullDraws);
    cvm_grid = spec.null_dist.sample(spec.eval_count, null_rng);
  }
  Rng ref_rng = root.child(kStreamReference);
  DataMatrix reference = empirical_null ? *spec.null_dist.empirical_rows()
                                        : spec.null_dist.sample(spec.ref_size, ref_rng);

  // The reference depth profile is the expensive piece (the reference
  // sample is large); compute it once.
  std::vector<double> ref_ks, ref_cvm;
  if (want_ks) ref_ks = eval.profile(reference, *ks_grid);
  if (want_cvm) ref_cvm = eval.profile(reference, *cvm_grid);

  auto eval_statistics = [&](const DataMatrix& sample, double& ks_out, double& cvm_out) {
    if (want_ks) {
      std::vector<double> prof(ks_grid->rows());
      for (std::size_t i = 0; i < prof.size(); ++i) {
        prof[i] = eval.value(sample, ks_grid->row(i));
      }
      ks_out = ks_from_profiles(prof, ref_ks, sqrt_n);
    }
    if (want_cvm) {
      std::vector<double> prof(cvm_grid->rows());
      for (std::size_t i = 0; i < prof.size(); ++i) {
        prof[i] = eval.value(sample, cvm_grid->row(i));
      }
      cvm_out = cvm_from_profiles(prof, ref_cvm,
                                  static_cast<double>(n) / static_cast<double>(cvm_grid->rows()));
    }
  };

  double ks_observed = 0.0, cvm_observed = 0.0;
  eval_statistics(data, ks_observed, cvm_observed);

  std::vector<double> ks_reps(spec.bootstrap, 0.0), cvm_reps(spec.bootstrap, 0.0);
  parallel_for(spec.bootstrap, [&](std::size_t b) {
    Rng rep_rng = root.child(kStreamBootstrap, b);
    DataMatrix star = spec.null_dist.sample(n, rep_rng);
    if (spec.plugin_standardize) star = standardize(star).first;
    eval_statistics(star, ks_reps[b], cvm_reps[b]);
  });

  auto finish = [&](StatisticKind kind, double observed,
                    std::vector<double>&& reps) -> TestResult {
    std::size_t exceed = 0;
    for (double r : reps) {
      if (r > observed) ++exceed;
    }
    return TestResult{kind,
                      observed,
                      pvalue_from_counts(exceed, spec.bootstrap, spec.corrected_pvalue),
                      std::move(reps),
                      spec.seed,
                      spec.eval_count,
                      spec.bootstrap,
                      empirical_null ? reference.rows() : spec.ref_size,
                      spec.grid,
                      spec.depth.method,
                      spec.plugin_standardize};
  };

  TestBattery battery;
  if (want_ks) battery.ks = finish(StatisticKind::kKS, ks_observed, std::move(ks_reps));
  if (want_cvm) battery.cvm = finish(StatisticKind::kCvM, cvm_observed, std::move(cvm_reps));
  return battery;
}

TestResult gof_test(const DataMatrix& x, const GofSpec& spec) {
  bool want_ks = spec.statistic == StatisticKind::kKS;
  TestBattery battery = gof_test_battery(x, spec, want_ks, !want_ks);
  return want_ks ? std::move(*battery.ks) : std::move(*battery.cvm);
}

TestBattery twosample_test_battery(const DataMatrix& x, const DataMatrix& y,
                                   const TwoSampleSpec& spec, bool want_ks, bool want_cvm) {
  if (!want_ks && !want_cvm) throw ParameterError("no statistic requested");
  check_common(spec.eval_count, spec.bootstrap);
  if (x.cols() != y.cols()) {
    throw ShapeError("two-sample test requires matching dimensions, got " +
                     std::to_string(x.cols()) + " and " + std::to_string(y.cols()));
  }
  const std::size_t n = x.rows(), m = y.rows(), d = x.cols();
  const double sqrt_nm = std::sqrt(static_cast<double>(n + m));
  Rng root(spec.seed);

  Rng dir_rng = root.child(kStreamDirections);
  DepthEvaluator eval(d, spec.depth, dir_rng);

  DataMatrix pooled = x.concat_rows(y);
  std::optional<DataMatrix> ks_grid;
  if (want_ks) {
    if (spec.grid == EvalGrid::kSphere) {
      Rng grid_rng = root.child(kStreamSphereGrid);
      ks_grid = directions_as_points(sample_unit_sphere(d, spec.eval_count, grid_rng));
    } else {
      ks_grid = pooled;
    }
  }

  auto eval_statistics = [&](const DataMatrix& a, const DataMatrix& b, double& ks_out,
                             double& cvm_out) {
    if (want_ks) {
      double worst = 0.0;
      for (std::size_t i = 0; i < ks_grid->rows(); ++i) {
        auto pt = ks_grid->row(i);
        worst = std::max(worst, std::abs(eval.value(a, pt) - eval.value(b, pt)));
      }
      ks_out = sqrt_nm * worst;
    }
    if (want_cvm) {
      // CvM integrates against the empirical measure of the pooled sample
      // at hand (the resampled points for a bootstrap replicate).
      double sum = 0.0;
      auto accumulate = [&](const DataMatrix& pts) {
        for (std::size_t i = 0; i < pts.rows(); ++i) {
          auto pt = pts.row(i);
          double diff = eval.value(a, pt) - eval.value(b, pt);
          sum += diff * diff;
        }
      };
      accumulate(a);
      accumulate(b);
      cvm_out = sum;
    }
  };

  double ks_observed = 0.0, cvm_observed = 0.0;
  eval_statistics(x, y, ks_observed, cvm_observed);

  std::vector<double> ks_reps(spec.bootstrap, 0.0), cvm_reps(spec.bootstrap, 0.0);
  parallel_for(spec.bootstrap, [&](std::size_t b) {
    Rng rep_rng = root.child(kStreamBootstrap, b);
    std::vector<std::size_t> idx(n + m);
    for (auto& i : idx) i = rep_rng.uniform_index(n + m);
    DataMatrix x_star = pooled.take_rows({idx.data(), n});
    DataMatrix y_star = pooled.take_rows({idx.data() + n, m});
    eval_statistics(x_star, y_star, ks_reps[b], cvm_reps[b]);
  });

  auto finish = [&](StatisticKind kind, double observed,
                    std::vector<double>&& reps) -> TestResult {
    std::size_t exceed = 0;
    for (double r : reps) {
      if (r > observed) ++exceed;
    }
    return TestResult{kind,
                      observed,
                      pvalue_from_counts(exceed, spec.bootstrap, spec.corrected_pvalue),
                      std::move(reps),
                      spec.seed,
                      spec.eval_count,
                      spec.bootstrap,
                      0,
                      spec.grid,
                      spec.depth.method,
                      false};
  };

  TestBattery battery;
  if (want_ks) battery.ks = finish(StatisticKind::kKS, ks_observed, std::move(ks_reps));
  if (want_cvm) battery.cvm = finish(StatisticKind::kCvM, cvm_observed, std::move(cvm_reps));
  return battery;
}

TestResult twosample_test(const DataMatrix& x, const DataMatrix& y, const TwoSampleSpec& spec) {
  bool want_ks = spec.statistic == StatisticKind::kKS;
  TestBattery battery = twosample_test_battery(x, y, spec, want_ks, !want_ks);
  return want_ks ? std::move(*battery.ks) : std::move(*battery.cvm);
}

}  // namespace ddd
