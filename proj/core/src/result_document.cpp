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

#include "ddd/result_document.hpp"

#include <json.hpp>

#include "ddd/error.hpp"

namespace ddd {

namespace {

using nlohmann::json;

json test_result_to_json(const TestResult& r) {
  return json{{"type", "test_result"},
              {"statistic", to_string(r.statistic)},
              {"statistic_value", r.statistic_value},
              {"p_value", r.p_value},
              {"replicates", r.replicates},
              {"seed", r.seed},
              {"eval_count", r.eval_count},
              {"bootstrap", r.bootstrap},
              {"ref_size", r.ref_size},
              {"grid", to_string(r.grid)},
              {"method", r.method == DepthMethod::kAuto
                             ? "auto"
                             : (r.method == DepthMethod::kExact ? "exact" : "approx")},
              {"standardized", r.standardized}};
}

TestResult test_result_from_json(const json& j) {
  TestResult r;
  r.statistic = j.at("statistic").get<std::string>() == "ks" ? StatisticKind::kKS
                                                             : StatisticKind::kCvM;
  r.statistic_value = j.at("statistic_value").get<double>();
  r.p_value = j.at("p_value").get<double>();
  r.replicates = j.at("replicates").get<std::vector<double>>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.eval_count = j.at("eval_count").get<std::size_t>();
  r.bootstrap = j.at("bootstrap").get<std::size_t>();
  r.ref_size = j.at("ref_size").get<std::size_t>();
  r.grid = j.at("grid").get<std::string>() == "sphere" ? EvalGrid::kSphere : EvalGrid::kPooled;
  std::string method = j.at("method").get<std::string>();
  r.method = method == "auto" ? DepthMethod::kAuto
                              : (method == "exact" ? DepthMethod::kExact : DepthMethod::kApprox);
  r.standardized = j.at("standardized").get<bool>();
  return r;
}

json power_to_json(const std::vector<PowerEstimate>& cells) {
  json rows = json::array();
  for (const auto& c : cells) {
    rows.push_back(json{{"model", c.model},
                        {"d", c.d},
                        {"n", c.n},
                        {"m", c.m},
                        {"statistic", to_string(c.statistic)},
                        {"alpha", c.alpha},
                        {"rate", c.rejection_rate},
                        {"std_error", c.mc_std_error},
                        {"reps", c.reps}});
  }
  return json{{"type", "power_table"}, {"cells", rows}};
}

std::vector<PowerEstimate> power_from_json(const json& j) {
  std::vector<PowerEstimate> cells;
  for (const auto& row : j.at("cells")) {
    PowerEstimate c;
    c.model = row.at("model").get<std::string>();
    c.d = row.at("d").get<std::size_t>();
    c.n = row.at("n").get<std::size_t>();
    c.m = row.at("m").get<std::size_t>();
    c.statistic = row.at("statistic").get<std::string>() == "ks" ? StatisticKind::kKS
                                                                 : StatisticKind::kCvM;
    c.alpha = row.at("alpha").get<double>();
    c.rejection_rate = row.at("rate").get<double>();
    c.mc_std_error = row.at("std_error").get<double>();
    c.reps = row.at("reps").get<std::size_t>();
    cells.push_back(std::move(c));
  }
  return cells;
}

json document_to_json(const ResultDocument& doc) {
  json j{{"schema_version", doc.schema_version},
         {"command", doc.command},
         {"seed", doc.seed},
         {"timing", json{{"seconds", doc.timing_seconds}}}};
  if (const auto* t = std::get_if<TestResult>(&doc.payload)) {
    j["result"] = test_result_to_json(*t);
  } else if (const auto* p = std::get_if<std::vector<PowerEstimate>>(&doc.payload)) {
    j["result"] = power_to_json(*p);
  } else {
    const auto& d = std::get<DepthValuesPayload>(doc.payload);
    j["result"] = json{{"type", "depth_values"}, {"depths", d.depths}};
  }
  return j;
}

}  // namespace

bool ResultDocument::operator==(const ResultDocument& other) const {
  return document_to_json(*this) == document_to_json(other);
}

std::string to_json(const ResultDocument& doc) { return document_to_json(doc).dump(2) + "\n"; }

std::string to_json_without_timing(const ResultDocument& doc) {
  json j = document_to_json(doc);
  j.erase("timing");
  return j.dump(2) + "\n";
}

ResultDocument result_document_from_json(const std::string& text) {
  json j = json::parse(text);
  ResultDocument doc;
  doc.schema_version = j.at("schema_version").get<std::string>();
  doc.command = j.at("command").get<std::string>();
  doc.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("timing")) doc.timing_seconds = j["timing"].at("seconds").get<double>();
  const json& result = j.at("result");
  std::string type = result.at("type").get<std::string>();
  if (type == "test_result") {
    doc.payload = test_result_from_json(result);
  } else if (type == "power_table") {
    doc.payload = power_from_json(result);
  } else if (type == "depth_values") {
    doc.payload = DepthValuesPayload{result.at("depths").get<std::vector<double>>()};
  } else {
    throw ParameterError("unknown result type '" + type + "'");
  }
  return doc;
}

}  // namespace ddd
