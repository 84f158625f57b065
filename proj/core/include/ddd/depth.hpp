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

#ifndef DDDEPTH_DEPTH_HPP
#define DDDEPTH_DEPTH_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ddd/data_matrix.hpp"
#include "ddd/distributions.hpp"
#include "ddd/rng.hpp"

namespace ddd {

// Half-space depth of a point x with respect to a sample X_1..X_n:
//   min over unit directions u of #{i : u'X_i <= u'x} / n,
// the smallest fraction of the sample captured by a closed half-space
// containing x. Values are multiples of 1/n in [0, 1]. Half-spaces are
// closed everywhere: boundary points always count, and sample points equal
// to x count in every half-space.

/// Exact closed form for d = 1: min(#{X_i <= x}, #{X_i >= x}) / n.
double depth_univariate(const DataMatrix& sample, double x);

/// Exact planar depth by candidate-direction enumeration, O(n^2): the
/// count function over directions is piecewise constant with breakpoints
/// perpendicular to the offsets X_i - x, so evaluating at every breakpoint
/// and at an interior direction of every arc between consecutive
/// breakpoints visits each piece. Reference engine; depth_sweep_2d is the
/// fast equivalent.
double depth_exact_2d(const DataMatrix& sample, std::span<const double> x);

/// Exact planar depth by rotating sweep, O(n log n). Agrees with
/// depth_exact_2d on every input -- equality, not approximation; the unit
/// and acceptance suites enforce it.
double depth_sweep_2d(const DataMatrix& sample, std::span<const double> x);

/// Depth restricted to the given directions:
///   min over u in dirs of #{i : u'(X_i - x) <= 0} / n.
/// Never below the exact depth. Works in any dimension.
double depth_approx(const DataMatrix& sample, std::span<const double> x,
                    const DirectionSet& dirs);

enum class DepthMethod {
  kAuto,    // closed form for d=1, sweep for d=2, approx otherwise
  kExact,   // closed form / sweep; d >= 3 is an error
  kApprox,  // random directions in any dimension
};

struct DepthConfig {
  DepthMethod method = DepthMethod::kAuto;
  std::size_t directions = 5000;  // direction count for the approx engine
};

/// Dispatching entry point. Approximate directions are drawn once per call
/// from `rng`; exact paths never touch it.
double depth(const DataMatrix& sample, std::span<const double> x, const DepthConfig& config,
             Rng& rng);

/// Batch evaluation sharing one direction set across all points (drawn
/// once up front when the approx engine is selected), so approximate
/// depths of different points are comparable. Evaluation may run in
/// parallel; results do not depend on the thread count.
std::vector<double> depth_profile(const DataMatrix& sample, const DataMatrix& eval_points,
                                  const DepthConfig& config, Rng& rng);

/// Resolves a DepthConfig against a fixed dimension, drawing the shared
/// direction set eagerly when the approximate engine will be used. Used by
/// the test statistics, which must evaluate many depths under one
/// consistent scheme.
class DepthEvaluator {
 public:
  DepthEvaluator(std::size_t dimension, const DepthConfig& config, Rng& rng);

  double value(const DataMatrix& sample, std::span<const double> x) const;
  std::vector<double> profile(const DataMatrix& sample, const DataMatrix& eval_points) const;
  /// Same over a flat row-major point buffer; `count` may be zero.
  std::vector<double> profile(const DataMatrix& sample, std::span<const double> points,
                              std::size_t count) const;
  std::size_t dimension() const { return dimension_; }

 private:
  std::size_t dimension_;
  DepthConfig config_;
  std::optional<DirectionSet> dirs_;
};

}  // namespace ddd

#endif  // DDDEPTH_DEPTH_HPP
