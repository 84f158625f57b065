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

#include <sstream>

#include "ddd/csv.hpp"
#include "ddd/result_document.hpp"
#include "ddd/svg.hpp"

using namespace ddd;

TEST_CASE("csv reader: header, order, labels") {
  std::istringstream in("a,b\n1,2\n3,4\n");
  DataMatrix m = read_csv_stream(in, true);
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 2);
  CHECK(m(0, 0) == 1.0);
  CHECK(m(1, 1) == 4.0);
  REQUIRE(m.column_labels().size() == 2);
  CHECK(m.column_labels()[0] == "a");
  CHECK(m.column_labels()[1] == "b");
}

TEST_CASE("csv reader: error positions") {
  std::istringstream ragged("1,2\n3\n");
  try {
    read_csv_stream(ragged, false);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }

  std::istringstream bad_cell("1,x\n");
  try {
    read_csv_stream(bad_cell, false);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 2);
  }

  std::istringstream has_nan("1,nan\n");
  CHECK_THROWS_AS(read_csv_stream(has_nan, false), ParseError);
  std::istringstream empty("");
  CHECK_THROWS_AS(read_csv_stream(empty, false), ParseError);
  CHECK_THROWS_AS(read_csv("/nonexistent/file.csv", false), Error);
}

TEST_CASE("csv reader tolerates windows line endings and spaces") {
  std::istringstream in("x, y\r\n 1 ,2\r\n-3,4e-1\r\n");
  DataMatrix m = read_csv_stream(in, true);
  CHECK(m(0, 0) == 1.0);
  CHECK(m(1, 1) == 0.4);
}

TEST_CASE("ddd csv serialization") {
  std::vector<DddRecord> empty;
  CHECK(write_ddd_csv(empty) == "index,ddd,band,outside\n");

  DddRecord r{3, {0.5, -1.0}, 0.25, 0.125, 0.125, 0.1, true};
  std::string text = write_ddd_csv({r});
  CHECK(text.find("index,ddd,band,outside,x0,x1\n") == 0);
  CHECK(text.find("3,0.125,") != std::string::npos);
  CHECK(text.find(",1,0.5,-1\n") != std::string::npos);

  DddRecord inside{0, {1.0, 2.0}, 0.2, 0.2, 0.0, 0.05, false};
  CHECK(write_ddd_csv({inside}).find(",0,1,2\n") != std::string::npos);
}

TEST_CASE("svg plot: structure and red marks") {
  CHECK_THROWS_AS(write_ddd_svg({}, 50, 400), ParameterError);

  std::string empty_plot = write_ddd_svg({}, 400, 300);
  CHECK(empty_plot.find("<svg") != std::string::npos);
  CHECK(empty_plot.find("red") == std::string::npos);

  DddRecord inside{0, {0.0, 0.0}, 0.2, 0.21, -0.01, 0.1, false};
  DddRecord outside{1, {0.0, 0.0}, 0.4, 0.1, 0.3, 0.1, true};
  std::string plot = write_ddd_svg({inside, outside}, 400, 300);
  std::size_t reds = 0;
  for (std::size_t pos = plot.find("\"red\""); pos != std::string::npos;
       pos = plot.find("\"red\"", pos + 1)) {
    ++reds;
  }
  CHECK(reds == 1);
  CHECK(plot.find("stroke-dasharray") != std::string::npos);

  std::string all_inside = write_ddd_svg({inside}, 400, 300);
  CHECK(all_inside.find("\"red\"") == std::string::npos);
}

TEST_CASE("result documents round-trip") {
  TestResult tr{StatisticKind::kCvM, 1.25, 0.42, {0.1, 0.2, 0.3}, 7, 200, 3, 1000,
                EvalGrid::kSphere, DepthMethod::kAuto, true};
  ResultDocument doc;
  doc.command = "gof data.csv --null standard-normal --seed 7";
  doc.seed = 7;
  doc.payload = tr;
  doc.timing_seconds = 1.5;

  std::string text = to_json(doc);
  ResultDocument parsed = result_document_from_json(text);
  CHECK(parsed == doc);
  const auto& back = std::get<TestResult>(parsed.payload);
  CHECK(back.statistic_value == tr.statistic_value);
  CHECK(back.replicates == tr.replicates);
  CHECK(back.standardized == tr.standardized);

  // determinism: identical content, different timing collapses without it
  ResultDocument other = doc;
  other.timing_seconds = 99.0;
  CHECK(to_json_without_timing(doc) == to_json_without_timing(other));
  CHECK(to_json(doc) != to_json(other));

  ResultDocument power;
  power.command = "simulate --model A1";
  power.payload = std::vector<PowerEstimate>{
      {"A1", 2, 100, 0, StatisticKind::kKS, 0.05, 0.056, 0.016, 200}};
  ResultDocument power_back = result_document_from_json(to_json(power));
  CHECK(power_back == power);

  ResultDocument depths;
  depths.command = "depth s.csv --point 0,0";
  depths.payload = DepthValuesPayload{{0.25, 0.5}};
  CHECK(result_document_from_json(to_json(depths)) == depths);
}
