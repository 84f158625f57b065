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

#ifndef DDDEPTH_TESTS_DEPTH_TEST_SUPPORT_HPP
#define DDDEPTH_TESTS_DEPTH_TEST_SUPPORT_HPP

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "ddd/data_matrix.hpp"
#include "ddd/rng.hpp"

namespace ddd::testing {

using IntPoint = std::array<long long, 2>;

// Independent planar depth oracle over integer coordinates, entirely in
// exact integer arithmetic. Directions evaluated: both perpendiculars of
// every offset, the offsets themselves with negations, and all pairwise
// sums of those. Sums of angularly consecutive directions land strictly
// inside each arc of the piecewise-constant count function, so the minimum
// over this set is the exact depth. O(n^3), test-only.
inline double int_depth_oracle(const std::vector<IntPoint>& pts, const IntPoint& q) {
  std::vector<IntPoint> offsets;
  long long zeros = 0;
  for (const auto& p : pts) {
    long long ox = p[0] - q[0], oy = p[1] - q[1];
    if (ox == 0 && oy == 0) {
      ++zeros;
    } else {
      offsets.push_back({ox, oy});
    }
  }
  const auto n = static_cast<long long>(pts.size());
  if (offsets.empty()) return 1.0;

  std::vector<IntPoint> dirs;
  for (const auto& o : offsets) {
    dirs.push_back({-o[1], o[0]});
    dirs.push_back({o[1], -o[0]});
    dirs.push_back(o);
    dirs.push_back({-o[0], -o[1]});
  }
  const std::size_t base = dirs.size();
  for (std::size_t i = 0; i < base; ++i) {
    for (std::size_t j = i + 1; j < base; ++j) {
      long long sx = dirs[i][0] + dirs[j][0];
      long long sy = dirs[i][1] + dirs[j][1];
      if (sx != 0 || sy != 0) dirs.push_back({sx, sy});
    }
  }

  long long best = n;
  for (const auto& u : dirs) {
    long long cnt = 0;
    for (const auto& o : offsets) {
      if (u[0] * o[0] + u[1] * o[1] <= 0) ++cnt;
    }
    if (cnt < best) best = cnt;
  }
  return static_cast<double>(zeros + best) / static_cast<double>(n);
}

struct PlanarInstance {
  DataMatrix sample;
  std::vector<double> query;         // size 2
  std::vector<IntPoint> int_points;  // filled for integer instances
  IntPoint int_query{0, 0};
  bool integer = false;
};

// Randomized planar instances stressing ties: integer grids (exact
// arithmetic end to end), duplicated rows, collinear runs, query equal to
// a sample point, and continuous coordinates.
inline PlanarInstance random_planar_instance(Rng& rng, std::size_t max_n = 60) {
  std::size_t n = 1 + rng.uniform_index(max_n);
  std::uint64_t flavor = rng.uniform_index(4);
  std::vector<double> values;
  values.reserve(2 * n);
  std::vector<IntPoint> int_points;
  IntPoint int_query{0, 0};
  std::vector<double> query(2, 0.0);
  bool integer = flavor != 3;

  if (integer) {
    long long span = 3 + static_cast<long long>(rng.uniform_index(8));
    for (std::size_t i = 0; i < n; ++i) {
      long long x = static_cast<long long>(rng.uniform_index(2 * span + 1)) - span;
      long long y = static_cast<long long>(rng.uniform_index(2 * span + 1)) - span;
      if (flavor == 1 && i % 3 == 1 && !int_points.empty()) {
        auto prev = int_points[rng.uniform_index(int_points.size())];  // duplicate a row
        x = prev[0];
        y = prev[1];
      }
      if (flavor == 2 && i % 2 == 0) {
        long long t = static_cast<long long>(rng.uniform_index(2 * span + 1)) - span;
        x = t;  // collinear run
        y = 2 * t - span / 2;
      }
      int_points.push_back({x, y});
      values.push_back(static_cast<double>(x));
      values.push_back(static_cast<double>(y));
    }
    if (rng.uniform_index(2) == 0) {
      int_query = int_points[rng.uniform_index(int_points.size())];
    } else {
      int_query = {static_cast<long long>(rng.uniform_index(2 * span + 1)) - span,
                   static_cast<long long>(rng.uniform_index(2 * span + 1)) - span};
    }
    query = {static_cast<double>(int_query[0]), static_cast<double>(int_query[1])};
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      double x = 4.0 * rng.normal();
      double y = 4.0 * rng.normal();
      if (i % 5 == 4 && i > 0) {
        std::size_t prev = rng.uniform_index(i);
        x = values[2 * prev];
        y = values[2 * prev + 1];
      }
      values.push_back(x);
      values.push_back(y);
    }
    if (rng.uniform_index(2) == 0) {
      std::size_t pick = rng.uniform_index(n);
      query = {values[2 * pick], values[2 * pick + 1]};
    } else {
      query = {4.0 * rng.normal(), 4.0 * rng.normal()};
    }
  }
  return PlanarInstance{DataMatrix(n, 2, std::move(values)), std::move(query),
                        std::move(int_points), int_query, integer};
}

}  // namespace ddd::testing

#endif  // DDDEPTH_TESTS_DEPTH_TEST_SUPPORT_HPP
