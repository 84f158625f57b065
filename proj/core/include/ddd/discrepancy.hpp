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

#ifndef DDDEPTH_DISCREPANCY_HPP
#define DDDEPTH_DISCREPANCY_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "ddd/data_matrix.hpp"
#include "ddd/depth.hpp"
#include "ddd/distributions.hpp"
#include "ddd/rng.hpp"

namespace ddd {

/// One evaluation point of a data-depth discrepancy plot: the two depths,
/// their difference, and whether the difference leaves the two-sigma band.
struct DddRecord {
  std::size_t index;          // position in the source ordering
  std::vector<double> point;  // the evaluation point itself
  double depth_a;
  double depth_b;
  double ddd;             // depth_a - depth_b
  double band_halfwidth;  // >= 0
  bool outside;           // |ddd| > band_halfwidth
};

/// Pointwise two-sigma halfwidth for the discrepancy plot, from the
/// binomial variance D(1-D) of a half-space count at depth level D:
///   one-sample:  2 sqrt(D(1-D)/n)
///   two-sample:  2 sqrt(D(1-D) (1/n + 1/m))
double two_sigma_band(double depth_ref, std::size_t n,
                      std::optional<std::size_t> m = std::nullopt);

/// Band construction: the closed-form halfwidth above, or a bootstrap band
/// (pointwise 2x standard deviation of the discrepancy over resamples of
/// the data side).
struct BandConfig {
  bool bootstrap = false;
  std::size_t bootstrap_samples = 200;
};

/// Goodness-of-fit discrepancy: one record per row of x, in input order.
/// depth_a is taken against x itself, depth_b against a Monte Carlo
/// reference sample of size n_ref drawn once from f0 (or against the
/// stored rows directly when f0 is empirical). Band: one-sample halfwidth
/// at the reference depth with sample size n.
std::vector<DddRecord> ddd_gof(const DataMatrix& x, const ReferenceDistribution& f0,
                               std::size_t n_ref, const DepthConfig& depth_config, Rng& rng,
                               const BandConfig& band = {});

/// Suggested reference-sample size for the plug-in reference depth.
inline std::size_t default_reference_size(std::size_t n) {
  return std::max<std::size_t>(10 * n, 5000);
}

/// Two-sample discrepancy over the pooled points (x rows first, then y
/// rows): depth_a against x, depth_b against y. Band: two-sample halfwidth
/// at the average of the two depths.
std::vector<DddRecord> ddd_twosample(const DataMatrix& x, const DataMatrix& y,
                                     const DepthConfig& depth_config, Rng& rng,
                                     const BandConfig& band = {});

}  // namespace ddd

#endif  // DDDEPTH_DISCREPANCY_HPP
