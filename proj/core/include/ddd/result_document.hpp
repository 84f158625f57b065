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

#ifndef DDDEPTH_RESULT_DOCUMENT_HPP
#define DDDEPTH_RESULT_DOCUMENT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ddd/hypothesis.hpp"
#include "ddd/simulation.hpp"

namespace ddd {

/// Free-standing depth evaluations (the `depth` subcommand payload).
struct DepthValuesPayload {
  std::vector<double> depths;
};

/// Versioned result envelope written by the CLI. Round-trips losslessly
/// through JSON; `timing_seconds` is the only field excluded from the
/// determinism guarantee.
struct ResultDocument {
  std::string schema_version = "1";
  std::string command;  // argv echo
  std::uint64_t seed = 0;
  std::variant<TestResult, std::vector<PowerEstimate>, DepthValuesPayload> payload;
  double timing_seconds = 0.0;

  bool operator==(const ResultDocument& other) const;
};

std::string to_json(const ResultDocument& doc);
ResultDocument result_document_from_json(const std::string& text);

/// The document serialized with the timing field removed; two runs with
/// the same argv and seed produce byte-identical strings.
std::string to_json_without_timing(const ResultDocument& doc);

}  // namespace ddd

#endif  // DDDEPTH_RESULT_DOCUMENT_HPP
