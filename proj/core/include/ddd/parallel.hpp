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

#ifndef DDDEPTH_PARALLEL_HPP
#define DDDEPTH_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace ddd {

/// Process-wide worker-count bound for parallel_for (the CLI --threads
/// flag lands here). 0 restores the hardware default.
void set_max_threads(unsigned n);
unsigned max_threads();

/// Runs fn(0..count-1), possibly on several threads. Tasks must write only
/// to per-index slots; scheduling order is unspecified, so results must not
/// depend on it (callers key any randomness by index). Nested calls run the
/// inner loop serially. Exceptions propagate to the caller.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace ddd

#endif  // DDDEPTH_PARALLEL_HPP
