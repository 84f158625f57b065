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

#ifndef DDDEPTH_RNG_HPP
#define DDDEPTH_RNG_HPP

#include <cstdint>

namespace ddd {

/// Mixes two 64-bit words into one (splitmix64 finalizer over a combined
/// word). Used to derive independent stream ids for nested Monte Carlo
/// loops so that parallel and serial schedules produce identical draws.
std::uint64_t mix_stream(std::uint64_t stream, std::uint64_t id);

/// Counter-based pseudo-random generator (Philox 2x64, 10 rounds).
///
/// The output sequence is a pure function of (seed, stream, position):
/// replicas of a loop can each construct Rng(seed, mix_stream(base, i))
/// and draw independently in any order, on any number of threads, with
/// bit-identical results. No global state, cheap to copy.
///
/// All variate transforms are implemented here rather than with
/// std::<distribution> adapters, which are not pinned by the standard and
/// would break reproducibility across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
      : seed_(seed), stream_(stream) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

  /// Fresh generator on a derived stream; does not consume from this one.
  Rng child(std::uint64_t id) const { return Rng(seed_, mix_stream(stream_, id)); }
  Rng child(std::uint64_t a, std::uint64_t b) const {
    return Rng(seed_, mix_stream(mix_stream(stream_, a), b));
  }

  std::uint64_t next_u64();

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform on (0, 1]; safe as a log() argument.
  double uniform_pos() { return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; }

  /// Standard normal via Box-Muller (no cached second value, so copies of
  /// the generator never disagree on hidden state).
  double normal();

  /// Gamma(shape, scale), shape > 0, by Marsaglia-Tsang squeeze.
  double gamma(double shape, double scale);

  double chi_squared(double dof) { return gamma(0.5 * dof, 2.0); }

  /// Uniform integer in [0, bound), bound >= 1, without modulo bias.
  std::uint64_t uniform_index(std::uint64_t bound);

 private:
  void refill();

  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t counter_ = 0;
  std::uint64_t buffer_[2] = {0, 0};
  int buffered_ = 0;
};

}  // namespace ddd

#endif  // DDDEPTH_RNG_HPP
