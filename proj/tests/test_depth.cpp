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

#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "ddd/depth.hpp"
#include "depth_test_support.hpp"

using namespace ddd;
using namespace ddd::testing;

namespace {

const std::vector<double> kOrigin{0.0, 0.0};

DataMatrix standard_normal_2d(std::size_t n, Rng& rng) {
  std::vector<double> v(2 * n);
  for (auto& e : v) e = rng.normal();
  return DataMatrix(n, 2, std::move(v));
}

// Unit-normalized direction set built from the oracle's integer direction
// list; covers every arc, so the restricted minimum equals the exact depth.
DirectionSet oracle_directions(const std::vector<IntPoint>& pts, const IntPoint& q) {
  std::vector<IntPoint> offsets;
  for (const auto& p : pts) {
    long long ox = p[0] - q[0], oy = p[1] - q[1];
    if (ox != 0 || oy != 0) offsets.push_back({ox, oy});
  }
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
  std::vector<double> values;
  values.reserve(2 * dirs.size());
  for (const auto& u : dirs) {
    double h = std::hypot(static_cast<double>(u[0]), static_cast<double>(u[1]));
    values.push_back(static_cast<double>(u[0]) / h);
    values.push_back(static_cast<double>(u[1]) / h);
  }
  return DirectionSet{dirs.size(), 2, std::move(values)};
}

}  // namespace

TEST_CASE("univariate closed form") {
  DataMatrix s{{1}, {2}, {3}, {4}, {5}};
  CHECK(depth_univariate(s, 3.0) == 3.0 / 5);
  CHECK(depth_univariate(s, 1.0) == 1.0 / 5);
  CHECK(depth_univariate(s, 0.0) == 0.0);
  CHECK(depth_univariate(s, 5.5) == 0.0);
  // ties on both sides are counted in both closed half-lines
  DataMatrix ties{{1}, {2}, {2}, {3}};
  CHECK(depth_univariate(ties, 2.0) == 3.0 / 4);
  CHECK_THROWS_AS(depth_univariate(DataMatrix{{1, 2}}, 0.0), ShapeError);
}

TEST_CASE("univariate equals direct counting on random pairs") {
  Rng rng(21, 0);
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t n = 1 + rng.uniform_index(40);
    std::vector<double> v(n);
    for (auto& e : v) {
      e = static_cast<double>(static_cast<long long>(rng.uniform_index(13)) - 6) / 2.0;
    }
    DataMatrix s(n, 1, std::vector<double>(v));
    double x = static_cast<double>(static_cast<long long>(rng.uniform_index(13)) - 6) / 2.0;
    std::size_t le = 0, ge = 0;
    for (double e : v) {
      le += e <= x;
      ge += e >= x;
    }
    CHECK(depth_univariate(s, x) == static_cast<double>(std::min(le, ge)) / n);
  }
}

TEST_CASE("planar depth: frozen micro cases") {
  DataMatrix tri{{0, 0}, {1, 0}, {0, 1}};
  CHECK(depth_exact_2d(tri, kOrigin) == doctest::Approx(1.0 / 3).epsilon(1e-15));
  CHECK(depth_sweep_2d(tri, kOrigin) == depth_exact_2d(tri, kOrigin));

  DataMatrix diamond{{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  CHECK(depth_exact_2d(diamond, kOrigin) == 0.5);
  CHECK(depth_sweep_2d(diamond, kOrigin) == 0.5);

  std::vector<double> far{5.0, 5.0};
  CHECK(depth_exact_2d(tri, far) == 0.0);
  CHECK(depth_sweep_2d(tri, far) == 0.0);

  // all points coincide with the query
  DataMatrix same{{2, 3}, {2, 3}, {2, 3}};
  std::vector<double> q{2.0, 3.0};
  CHECK(depth_sweep_2d(same, q) == 1.0);
  CHECK(depth_exact_2d(same, q) == 1.0);
}

TEST_CASE("planar engines match the integer oracle") {
  Rng rng(22, 0);
  int integer_instances = 0;
  for (int trial = 0; trial < 400; ++trial) {
    PlanarInstance inst = random_planar_instance(rng, 25);
    if (!inst.integer) continue;
    ++integer_instances;
    double expected = int_depth_oracle(inst.int_points, inst.int_query);
    CHECK(depth_exact_2d(inst.sample, inst.query) == expected);
    CHECK(depth_sweep_2d(inst.sample, inst.query) == expected);
  }
  CHECK(integer_instances > 200);
}

TEST_CASE("sweep equals enumeration on mixed random instances") {
  Rng rng(23, 0);
  for (int trial = 0; trial < 400; ++trial) {
    PlanarInstance inst = random_planar_instance(rng, 40);
    CHECK(depth_sweep_2d(inst.sample, inst.query) == depth_exact_2d(inst.sample, inst.query));
  }
}

TEST_CASE("sample points have depth at least 1/n") {
  Rng rng(24, 0);
  for (int trial = 0; trial < 50; ++trial) {
    PlanarInstance inst = random_planar_instance(rng, 20);
    const auto n = static_cast<double>(inst.sample.rows());
    for (std::size_t i = 0; i < inst.sample.rows(); ++i) {
      CHECK(depth_sweep_2d(inst.sample, inst.sample.row(i)) >= 1.0 / n);
    }
  }
}

TEST_CASE("depth vanishes outside the bounding box") {
  Rng rng(25, 0);
  for (int trial = 0; trial < 50; ++trial) {
    DataMatrix s = standard_normal_2d(1 + rng.uniform_index(30), rng);
    double xmax = 0, ymax = 0;
    for (std::size_t i = 0; i < s.rows(); ++i) {
      xmax = std::max(xmax, std::abs(s(i, 0)));
      ymax = std::max(ymax, std::abs(s(i, 1)));
    }
    std::vector<double> outside{xmax + 1.0, ymax + 1.0};
    CHECK(depth_sweep_2d(s, outside) == 0.0);
  }
}

TEST_CASE("affine invariance of the exact engines (integer affine maps)") {
  Rng rng(26, 0);
  const long long mats[4][4] = {{2, 1, 1, 1}, {1, 0, 3, 1}, {0, -1, 1, 0}, {3, -2, 1, -1}};
  for (int trial = 0; trial < 120; ++trial) {
    PlanarInstance inst = random_planar_instance(rng, 15);
    if (!inst.integer) continue;
    const auto& a = mats[trial % 4];
    std::vector<double> mapped;
    for (const auto& p : inst.int_points) {
      mapped.push_back(static_cast<double>(a[0] * p[0] + a[1] * p[1] + 7));
      mapped.push_back(static_cast<double>(a[2] * p[0] + a[3] * p[1] - 3));
    }
    std::vector<double> mq{
        static_cast<double>(a[0] * inst.int_query[0] + a[1] * inst.int_query[1] + 7),
        static_cast<double>(a[2] * inst.int_query[0] + a[3] * inst.int_query[1] - 3)};
    DataMatrix ms(inst.int_points.size(), 2, std::move(mapped));
    CHECK(depth_exact_2d(ms, mq) == depth_exact_2d(inst.sample, inst.query));
    CHECK(depth_sweep_2d(ms, mq) == depth_sweep_2d(inst.sample, inst.query));
  }
}

TEST_CASE("approx with the oracle direction set reproduces the exact depth") {
  Rng rng(27, 0);
  for (int trial = 0; trial < 60; ++trial) {
    PlanarInstance inst = random_planar_instance(rng, 12);
    if (!inst.integer) continue;
    DirectionSet dirs = oracle_directions(inst.int_points, inst.int_query);
    if (dirs.count == 0) continue;  // all points equal the query
    CHECK(depth_approx(inst.sample, inst.query, dirs) ==
          depth_exact_2d(inst.sample, inst.query));
  }
}

TEST_CASE("approx is an upper bound, monotone in the direction set") {
  Rng rng(28, 0);
  DataMatrix s = standard_normal_2d(60, rng);
  Rng dir_rng(29, 0);
  DirectionSet big = sample_unit_sphere(2, 400, dir_rng);
  DirectionSet small{200, 2, {big.values.begin(), big.values.begin() + 400}};
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<double> q{rng.normal(), rng.normal()};
    double exact = depth_exact_2d(s, q);
    double with_small = depth_approx(s, q, small);
    double with_big = depth_approx(s, q, big);
    CHECK(with_big <= with_small);
    CHECK(with_big >= exact);
    CHECK(with_small >= exact);
  }
}

TEST_CASE("approx rejects shape mismatches") {
  DataMatrix s{{0, 0}, {1, 1}};
  Rng rng(30, 0);
  DirectionSet d3 = sample_unit_sphere(3, 8, rng);
  CHECK_THROWS_AS(depth_approx(s, kOrigin, d3), ShapeError);
  DirectionSet empty{0, 2, {}};
  CHECK_THROWS_AS(depth_approx(s, kOrigin, empty), ShapeError);
}

TEST_CASE("dispatcher routes by dimension") {
  Rng rng(31, 0);
  DepthConfig exact_cfg{DepthMethod::kExact, 100};

  DataMatrix one_d{{1}, {2}, {3}};
  std::vector<double> q1{2.0};
  CHECK(depth(one_d, q1, exact_cfg, rng) == depth_univariate(one_d, 2.0));
  CHECK(depth(one_d, q1, DepthConfig{}, rng) == depth_univariate(one_d, 2.0));

  DataMatrix tri{{0, 0}, {1, 0}, {0, 1}};
  CHECK(depth(tri, kOrigin, DepthConfig{}, rng) == depth_exact_2d(tri, kOrigin));

  DataMatrix cube{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  std::vector<double> q3{0.0, 0.0, 0.0};
  CHECK_THROWS_AS(depth(cube, q3, exact_cfg, rng), UnsupportedDimensionError);
  DepthConfig approx_cfg{DepthMethod::kApprox, 500};
  double approx3 = depth(cube, q3, approx_cfg, rng);
  CHECK(approx3 >= 0.0);
  CHECK(approx3 <= 1.0);
}

TEST_CASE("profile shares one direction set and matches pointwise calls") {
  Rng rng(32, 0);
  DataMatrix tri{{0, 0}, {1, 0}, {0, 1}};
  std::vector<double> prof = depth_profile(tri, tri, DepthConfig{}, rng);
  REQUIRE(prof.size() == 3);
  for (double v : prof) CHECK(v == doctest::Approx(1.0 / 3).epsilon(1e-15));

  DataMatrix s = standard_normal_2d(40, rng);
  DataMatrix pts = standard_normal_2d(25, rng);
  std::vector<double> batch = depth_profile(s, pts, DepthConfig{}, rng);
  for (std::size_t i = 0; i < pts.rows(); ++i) {
    CHECK(batch[i] == depth_sweep_2d(s, pts.row(i)));
  }

  // empty point buffer gives an empty profile
  Rng rng2(33, 0);
  DepthEvaluator eval(2, DepthConfig{}, rng2);
  CHECK(eval.profile(s, std::span<const double>{}, 0).empty());
}
