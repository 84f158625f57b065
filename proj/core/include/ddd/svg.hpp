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

#ifndef DDDEPTH_SVG_HPP
#define DDDEPTH_SVG_HPP

#include <string>
#include <vector>

#include "ddd/discrepancy.hpp"

namespace ddd {

/// Standalone SVG 1.1 scatter of (index, ddd): horizontal zero axis,
/// dashed band curves at +/- the per-point halfwidth, points inside the
/// band in black, outside in red. Width and height must be at least 100.
std::string write_ddd_svg(const std::vector<DddRecord>& records, unsigned width,
                          unsigned height);

}  // namespace ddd

#endif  // DDDEPTH_SVG_HPP
