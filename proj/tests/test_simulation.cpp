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

#include "ddd/parallel.hpp"
#include "ddd/simulation.hpp"
#include "ddd/standardize.hpp"

using namespace ddd;

namespace {

// Small desk spec so unit tests stay quick; the acceptance suite runs the
// full-size cells.
ExperimentSpec small_spec() {
  ExperimentSpec spec;
  spec.d = 2;
  spec.n = 30;
  spec.reps = 24;
  spec.bootstrap = 40;
  spec.eval_count = 200;
  spec.ref_size = 300;
  spec.seed = 101;
  return spec;
}

}  // namespace

TEST_CASE("model distributions have the advertised shapes") {
  Rng rng(70, 0);
  // A2: a fifth of the draws sit near 5*1
  DataMatrix a2 = gof_model_distribution(GofModel::kA2, 2).sample(20000, rng);
  std::size_t far = 0;
  for (std::size_t i = 0; i < a2.rows(); ++i) far += a2(i, 0) > 2.5;
  CHECK(static_cast<double>(far) / static_cast<double>(a2.rows()) ==
        doctest::Approx(0.2).epsilon(0.08));

  // A3: mixture of two centered normals, marginal variance 0.8 + 0.2 = 1
  DataMatrix a3 = gof_model_distribution(GofModel::kA3, 3).sample(20000, rng);
  Eigen::MatrixXd cov = sample_covariance(a3);
  CHECK(cov(0, 0) == doctest::Approx(1.0).epsilon(0.05));
  CHECK(cov(0, 1) == doctest::Approx(0.1).epsilon(0.5));  // 0.2 * 0.5 off-diagonal

  // A5 is the dof-1 t
  Rng ra(71, 0), rb(71, 0);
  CHECK(gof_model_distribution(GofModel::kA5, 2).sample(50, ra) ==
        ReferenceDistribution::student_t(Eigen::Vector2d::Zero(), Eigen::Matrix2d::Identity(),
                                         1.0)
            .sample(50, rb));
}

TEST_CASE("single repeat yields a 0/1 rate") {
  ExperimentSpec spec = small_spec();
  spec.reps = 1;
  auto cells = run_gof_cell(spec);
  REQUIRE(cells.size() == 2);
  for (const auto& c : cells) {
    CHECK((c.rejection_rate == 0.0 || c.rejection_rate == 1.0));
    CHECK(c.mc_std_error == 0.0);
    CHECK(c.reps == 1);
  }
}

TEST_CASE("gof cell: strong alternative rejects far more than the null") {
  ExperimentSpec null_spec = small_spec();
  null_spec.model = GofModel::kA1;
  auto null_cells = run_gof_cell(null_spec);

  ExperimentSpec alt_spec = small_spec();
  alt_spec.model = GofModel::kA2;
  auto alt_cells = run_gof_cell(alt_spec);

  REQUIRE(null_cells.size() == 2);
  REQUIRE(alt_cells.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(null_cells[i].rejection_rate <= 0.3);
    CHECK(alt_cells[i].rejection_rate >= 0.6);
    CHECK(alt_cells[i].rejection_rate > null_cells[i].rejection_rate);
    // rate * reps is an integer
    double scaled = null_cells[i].rejection_rate * static_cast<double>(null_cells[i].reps);
    CHECK(scaled == doctest::Approx(std::round(scaled)).epsilon(1e-12));
  }
}

TEST_CASE("cells are deterministic and thread-count independent") {
  ExperimentSpec spec = small_spec();
  spec.model = GofModel::kA4;
  spec.reps = 10;
  set_max_threads(1);
  auto serial = run_gof_cell(spec);
  set_max_threads(8);
  auto parallel = run_gof_cell(spec);
  set_max_threads(0);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].rejection_rate == parallel[i].rejection_rate);
  }
}

TEST_CASE("two-sample cell: size below power under a shift") {
  ExperimentSpec spec = small_spec();
  spec.model = ShiftModel{0.0};
  spec.m = 30;
  auto size_cells = run_twosample_cell(spec);
  spec.model = ShiftModel{1.5};
  auto power_cells = run_twosample_cell(spec);
  REQUIRE(size_cells.size() == 2);
  REQUIRE(power_cells.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(size_cells[i].rejection_rate <= 0.3);
    CHECK(power_cells[i].rejection_rate >= 0.7);
  }
  CHECK_THROWS_AS(run_twosample_cell(small_spec()), ParameterError);  // m == 0
}

TEST_CASE("local power curve: gamma 0 is the null, errors past the weight cap") {
  auto f0 = ReferenceDistribution::standard_normal(2);
  auto h = ReferenceDistribution::standard_laplace(2);
  ExperimentSpec base = small_spec();
  base.reps = 16;
  std::vector<double> grid{0.0, 4.0};
  auto curve = run_local_power_curve(grid, f0, h, base);
  REQUIRE(curve.size() == 2);
  CHECK(curve[0].first == 0.0);
  CHECK(curve[0].second.front().rejection_rate <= 0.4);

  std::vector<double> too_far{7.0};  // 7/sqrt(30) < 1, fine one-sample; cap hit at n_total=4
  ExperimentSpec tiny = base;
  tiny.n = 4;
  CHECK_THROWS_AS(run_local_power_curve(too_far, f0, h, tiny), ParameterError);
}

TEST_CASE("two-sample power is monotone in the shift") {
  // reduced-scale version of the location sweep; the acceptance suite runs
  // the full-size cells
  ExperimentSpec spec = small_spec();
  spec.n = 50;
  spec.m = 117;
  spec.reps = 24;
  spec.bootstrap = 100;
  spec.eval_count = 400;
  double rates[3];
  double ses[3];
  double mus[3] = {0.0, 0.5, 1.0};
  for (int i = 0; i < 3; ++i) {
    spec.model = ShiftModel{mus[i]};
    auto cells = run_twosample_cell(spec);
    rates[i] = cells[1].rejection_rate;  // cvm
    ses[i] = cells[1].mc_std_error;
  }
  CHECK(rates[0] <= 0.3);
  CHECK(rates[2] >= 0.8);
  CHECK(rates[1] >= rates[0] - 2.0 * std::sqrt(ses[0] * ses[0] + ses[1] * ses[1]));
  CHECK(rates[2] >= rates[1] - 2.0 * std::sqrt(ses[1] * ses[1] + ses[2] * ses[2]));
}

TEST_CASE("render_table: ordering, duplicates, empty input") {
  PowerEstimate a{"A2", 2, 100, 0, StatisticKind::kKS, 0.05, 0.5, 0.03, 100};
  PowerEstimate b{"A1", 2, 50, 0, StatisticKind::kKS, 0.05, 0.04, 0.01, 100};
  PowerEstimate c{"A1", 2, 100, 0, StatisticKind::kKS, 0.05, 0.06, 0.02, 100};
  std::vector<PowerEstimate> cells{a, b, c};
  std::string table = render_table(cells);
  // ordered by (model, d, n): A1/50 before A1/100 before A2/100
  CHECK(table.find("A1") < table.find("A2"));
  CHECK(table.find(" 50") < table.find("A2"));

  std::string csv = render_table_csv(cells);
  CHECK(csv.rfind("model,d,n,m,statistic,alpha,rate,std_error,reps\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);

  std::vector<PowerEstimate> dup{a, a};
  CHECK_THROWS_AS(render_table(dup), ParameterError);
  std::vector<PowerEstimate> empty;
  CHECK(render_table(empty).find("model") == 0);
}
