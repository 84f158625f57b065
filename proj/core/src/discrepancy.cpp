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

#include "ddd/discrepancy.hpp"

#include <cmath>

#include "ddd/error.hpp"
#include "ddd/parallel.hpp"

namespace ddd {

namespace {

std::vector<double> point_of(const DataMatrix& m, std::size_t i) {
  auto r = m.row(i);
  return {r.begin(), r.end()};
}

// Pointwise bootstrap band: resample the data side(s), recompute the
// discrepancy at every evaluation point, and take twice the standard
// deviation. The reference/second side passed in `fixed_b` stays fixed.
std::vector<double> bootstrap_halfwidths(const DataMatrix& eval_points, const DataMatrix& a,
                                         const DataMatrix* b_or_null,
                                         const DepthEvaluator& eval, std::size_t samples,
                                         Rng& rng) {
  const std::size_t p = eval_points.rows();
  std::vector<double> sum(p, 0.0), sumsq(p, 0.0);
  for (std::size_t s = 0; s < samples; ++s) {
    Rng boot_rng = rng.child(0x6261, s);
    std::vector<std::size_t> idx(a.rows());
    for (auto& i : idx) i = boot_rng.uniform_index(a.rows());
    DataMatrix a_star = a.take_rows(idx);
    const DataMatrix* b = b_or_null;
    DataMatrix b_star = a_star;  // placeholder; reused only when b resamples
    if (b_or_null != nullptr) {
      std::vector<std::size_t> idx_b(b_or_null->rows());
      for (auto& i : idx_b) i = boot_rng.uniform_index(b_or_null->rows());
      b_star = b_or_null->take_rows(idx_b);
      b = &b_star;
    }
    for (std::size_t i = 0; i < p; ++i) {
      double da = eval.value(a_star, eval_points.row(i));
      double db = b == nullptr ? 0.0 : eval.value(*b, eval_points.row(i));
      double v = da - db;
      sum[i] += v;
      sumsq[i] += v * v;
    }
  }
  std::vector<double> half(p);
  for (std::size_t i = 0; i < p; ++i) {
    double mean = sum[i] / static_cast<double>(samples);
    double var = sumsq[i] / static_cast<double>(samples) - mean * mean;
    half[i] = 2.0 * std::sqrt(std::max(0.0, var));
  }
  return half;
}

}  // namespace

double two_sigma_band(double depth_ref, std::size_t n, std::optional<std::size_t> m) {
  if (n == 0) throw ParameterError("two_sigma_band requires n >= 1");
  double d = depth_ref;
  double variance = d * (1.0 - d);
  double scale = 1.0 / static_cast<double>(n);
  if (m) {
    if (*m == 0) throw ParameterError("two_sigma_band requires m >= 1");
    scale += 1.0 / static_cast<double>(*m);
  }
  return 2.0 * std::sqrt(variance * scale);
}

std::vector<DddRecord> ddd_gof(const DataMatrix& x, const ReferenceDistribution& f0,
                               std::size_t n_ref, const DepthConfig& depth_config, Rng& rng,
                               const BandConfig& band) {
  if (x.cols() != f0.dimension()) {
    throw ShapeError("data dimension does not match the reference distribution");
  }
  if (n_ref == 0 && f0.empirical_rows() == nullptr) {
    throw ParameterError("ddd_gof requires n_ref >= 1");
  }
  const std::size_t n = x.rows();

  DepthEvaluator eval(x.cols(), depth_config, rng);
  // One reference sample for the whole plot. An empirical reference is its
  // own exact sample; no Monte Carlo redraw.
  const DataMatrix* stored = f0.empirical_rows();
  Rng ref_rng = rng.child(0x7265);
  DataMatrix reference = stored != nullptr ? *stored : f0.sample(n_ref, ref_rng);

  std::vector<double> depth_a(n), depth_b(n);
  parallel_for(n, [&](std::size_t i) {
    depth_a[i] = eval.value(x, x.row(i));
    depth_b[i] = eval.value(reference, x.row(i));
  });

  std::vector<double> halfwidths(n);
  if (band.bootstrap) {
    Rng band_rng = rng.child(0x6264);
    halfwidths = bootstrap_halfwidths(x, x, &reference, eval, band.bootstrap_samples, band_rng);
  } else {
    for (std::size_t i = 0; i < n; ++i) halfwidths[i] = two_sigma_band(depth_b[i], n);
  }

  std::vector<DddRecord> records;
  records.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    double diff = depth_a[i] - depth_b[i];
    records.push_back(DddRecord{i, point_of(x, i), depth_a[i], depth_b[i], diff, halfwidths[i],
                                std::abs(diff) > halfwidths[i]});
  }
  return records;
}

std::vector<DddRecord> ddd_twosample(const DataMatrix& x, const DataMatrix& y,
                                     const DepthConfig& depth_config, Rng& rng,
                                     const BandConfig& band) {
  if (x.cols() != y.cols()) {
    throw ShapeError("two-sample discrepancy requires matching dimensions, got " +
                     std::to_string(x.cols()) + " and " + std::to_string(y.cols()));
  }
  const std::size_t n = x.rows(), m = y.rows();
  DataMatrix pooled = x.concat_rows(y);

  DepthEvaluator eval(x.cols(), depth_config, rng);
  std::vector<double> depth_a(n + m), depth_b(n + m);
  parallel_for(n + m, [&](std::size_t i) {
    depth_a[i] = eval.value(x, pooled.row(i));
    depth_b[i] = eval.value(y, pooled.row(i));
  });

  std::vector<double> halfwidths(n + m);
  if (band.bootstrap) {
    Rng band_rng = rng.child(0x6264);
    halfwidths = bootstrap_halfwidths(pooled, x, &y, eval, band.bootstrap_samples, band_rng);
  } else {
    for (std::size_t i = 0; i < n + m; ++i) {
      halfwidths[i] = two_sigma_band(0.5 * (depth_a[i] + depth_b[i]), n, m);
    }
  }

  std::vector<DddRecord> records;
  records.reserve(n + m);
  for (std::size_t i = 0; i < n + m; ++i) {
    double diff = depth_a[i] - depth_b[i];
    records.push_back(DddRecord{i, point_of(pooled, i), depth_a[i], depth_b[i], diff,
                                halfwidths[i], std::abs(diff) > halfwidths[i]});
  }
  return records;
}

}  // namespace ddd
