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

#include <cmath>

#include "ddd/discrepancy.hpp"

using namespace ddd;

namespace {

const DataMatrix kTriangleX{{0, 0}, {1, 0}, {0, 1}};
const DataMatrix kTriangleY{{2, 2}, {3, 2}, {2, 3}};

}  // namespace

TEST_CASE("two-sigma band closed forms") {
  CHECK(two_sigma_band(0.25, 100) == doctest::Approx(0.0866025).epsilon(1e-5));
  CHECK(two_sigma_band(0.0, 57) == 0.0);
  CHECK(two_sigma_band(0.25, 100, 100) == doctest::Approx(0.1224745).epsilon(1e-5));
  CHECK_THROWS_AS(two_sigma_band(0.2, 0), ParameterError);
}

TEST_CASE("gof discrepancy against an empirical reference of the data itself") {
  Rng rng(41, 0);
  auto f0 = ReferenceDistribution::empirical(kTriangleX);
  auto records = ddd_gof(kTriangleX, f0, 50, DepthConfig{}, rng);
  REQUIRE(records.size() == 3);
  for (const auto& r : records) {
    CHECK(r.ddd == 0.0);
    CHECK_FALSE(r.outside);
    CHECK(r.depth_a == r.depth_b);
  }
}

TEST_CASE("gof records preserve order, bounds, and the band rule") {
  Rng rng(42, 0);
  auto f0 = ReferenceDistribution::standard_normal(2);
  DataMatrix x = f0.sample(40, rng);
  Rng run_rng(43, 0);
  auto records = ddd_gof(x, f0, 2000, DepthConfig{}, run_rng);
  REQUIRE(records.size() == 40);
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    CHECK(r.index == i);
    CHECK(r.point[0] == x(i, 0));
    CHECK(r.ddd == r.depth_a - r.depth_b);
    CHECK(std::abs(r.ddd) <= 1.0);
    CHECK(std::abs(r.ddd) <= std::max(r.depth_a, r.depth_b));
    CHECK(r.band_halfwidth == two_sigma_band(r.depth_b, 40));
    CHECK(r.outside == (std::abs(r.ddd) > r.band_halfwidth));
  }
}

TEST_CASE("two-sample discrepancy: identical samples give zero everywhere") {
  Rng rng(44, 0);
  auto records = ddd_twosample(kTriangleX, kTriangleX, DepthConfig{}, rng);
  REQUIRE(records.size() == 6);
  for (const auto& r : records) {
    CHECK(r.ddd == 0.0);
    CHECK_FALSE(r.outside);
  }
}

TEST_CASE("two-sample discrepancy on separated triangles") {
  Rng rng(45, 0);
  auto records = ddd_twosample(kTriangleX, kTriangleY, DepthConfig{}, rng);
  REQUIRE(records.size() == 6);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(records[i].ddd == doctest::Approx(1.0 / 3).epsilon(1e-15));
    CHECK(records[i].depth_a == doctest::Approx(1.0 / 3).epsilon(1e-15));
    CHECK(records[i].depth_b == 0.0);
  }
  for (std::size_t i = 3; i < 6; ++i) {
    CHECK(records[i].ddd == doctest::Approx(-1.0 / 3).epsilon(1e-15));
  }
}

TEST_CASE("two-sample discrepancy is antisymmetric") {
  Rng rng(46, 0);
  auto fwd = ddd_twosample(kTriangleX, kTriangleY, DepthConfig{}, rng);
  auto rev = ddd_twosample(kTriangleY, kTriangleX, DepthConfig{}, rng);
  REQUIRE(fwd.size() == rev.size());
  // pooled order flips (x rows first), so match by coordinates
  for (const auto& f : fwd) {
    for (const auto& r : rev) {
      if (f.point == r.point) {
        CHECK(f.ddd == -r.ddd);
        CHECK(f.depth_a == r.depth_b);
      }
    }
  }
}

TEST_CASE("shape errors propagate") {
  Rng rng(47, 0);
  CHECK_THROWS_AS(ddd_twosample(kTriangleX, DataMatrix{{1, 2, 3}}, DepthConfig{}, rng),
                  ShapeError);
  auto f0 = ReferenceDistribution::standard_normal(3);
  CHECK_THROWS_AS(ddd_gof(kTriangleX, f0, 100, DepthConfig{}, rng), ShapeError);
}

TEST_CASE("under the null most points stay inside the two-sigma band") {
  auto f0 = ReferenceDistribution::standard_normal(2);
  double outside_sum = 0.0;
  const int repeats = 60;
  for (int rep = 0; rep < repeats; ++rep) {
    Rng data_rng(48, static_cast<std::uint64_t>(rep));
    DataMatrix x = f0.sample(100, data_rng);
    Rng run_rng(49, static_cast<std::uint64_t>(rep));
    auto records = ddd_gof(x, f0, 1000, DepthConfig{}, run_rng);
    std::size_t outside = 0;
    for (const auto& r : records) outside += r.outside;
    outside_sum += static_cast<double>(outside) / static_cast<double>(records.size());
  }
  double mean_outside = outside_sum / repeats;
  CHECK(mean_outside <= 0.15);
  // single-run coverage example: at least 90% inside
  Rng data_rng(50, 0);
  DataMatrix x = f0.sample(100, data_rng);
  Rng run_rng(51, 0);
  auto records = ddd_gof(x, f0, 2000, DepthConfig{}, run_rng);
  std::size_t inside = 0;
  for (const auto& r : records) inside += !r.outside;
  CHECK(static_cast<double>(inside) / static_cast<double>(records.size()) >= 0.9);
}

TEST_CASE("high-dimensional discrepancy separates normal from cauchy at tiny n") {
  // dimension far above the sample size; depth goes through the
  // random-direction engine
  const std::size_t d = 15, n = 10;
  auto di = static_cast<Eigen::Index>(d);
  auto normal = ReferenceDistribution::standard_normal(d);
  auto cauchy = ReferenceDistribution::cauchy(Eigen::VectorXd::Zero(di),
                                              Eigen::MatrixXd::Identity(di, di));
  Rng x_rng(54, 0), y_rng(54, 1), run_rng(54, 2);
  DataMatrix x = normal.sample(n, x_rng);
  DataMatrix y = cauchy.sample(n, y_rng);
  auto records = ddd_twosample(x, y, DepthConfig{}, run_rng);
  REQUIRE(records.size() == 2 * n);
  // the discrepancies separate by sample instead of clustering around the
  // axis: own-sample depth dominates, the other sample's depth is near 0
  std::size_t x_positive = 0, y_negative = 0;
  double magnitude = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    x_positive += records[i].ddd > 0.0;
    y_negative += records[n + i].ddd < 0.0;
    magnitude += std::abs(records[i].ddd) + std::abs(records[n + i].ddd);
  }
  CHECK(x_positive >= 8);
  CHECK(y_negative >= 8);
  CHECK(magnitude / (2.0 * n) >= 0.05);
}

TEST_CASE("bootstrap band is available and roughly matches the closed form") {
  auto f0 = ReferenceDistribution::standard_normal(2);
  Rng data_rng(52, 0);
  DataMatrix x = f0.sample(60, data_rng);
  Rng a_rng(53, 0), b_rng(53, 0);
  auto analytic = ddd_gof(x, f0, 1500, DepthConfig{}, a_rng);
  BandConfig boot{true, 200};
  auto bootstrap = ddd_gof(x, f0, 1500, DepthConfig{}, b_rng, boot);
  REQUIRE(analytic.size() == bootstrap.size());
  double ratio_sum = 0.0;
  std::size_t counted = 0;
  for (std::size_t i = 0; i < analytic.size(); ++i) {
    CHECK(bootstrap[i].ddd == analytic[i].ddd);
    if (analytic[i].band_halfwidth > 1e-3) {
      ratio_sum += bootstrap[i].band_halfwidth / analytic[i].band_halfwidth;
      ++counted;
    }
  }
  REQUIRE(counted > 0);
  double mean_ratio = ratio_sum / static_cast<double>(counted);
  CHECK(mean_ratio > 0.5);
  CHECK(mean_ratio < 2.0);
}
