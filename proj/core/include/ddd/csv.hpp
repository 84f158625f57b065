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

#ifndef DDDEPTH_CSV_HPP
#define DDDEPTH_CSV_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "ddd/data_matrix.hpp"
#include "ddd/discrepancy.hpp"

namespace ddd {

/// Reads a rectangular numeric CSV. Ragged rows and non-numeric cells
/// raise ParseError with the 1-based line (and column); NaN entries are
/// rejected. Header names become the matrix's column labels.
DataMatrix read_csv(const std::string& path, bool has_header);
DataMatrix read_csv_stream(std::istream& in, bool has_header);

/// Serializes discrepancy records: header "index,ddd,band,outside" plus
/// one coordinate column per dimension; reals carry 17 significant digits,
/// the outside flag is 0/1.
std::string write_ddd_csv(const std::vector<DddRecord>& records);

}  // namespace ddd

#endif  // DDDEPTH_CSV_HPP
