// Copyright 2026 The evaug Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>

namespace evaug {

// Seeded generator with distribution code written out by hand, so that the
// same seed yields the same draws on every standard library. The standard
// <random> distributions are implementation-defined and are not used.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Per-sample stream derived from a global seed and a sample index.
  static Rng for_sample(std::uint64_t seed, std::uint64_t sample_index);

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1) with 53 bits of resolution.
  double unit();

  // Uniform real in [lo, hi). Returns lo when lo == hi.
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  // Uniform integer in the closed range [lo, hi]; unbiased.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  // True with probability p (p <= 0 never, p >= 1 always).
  bool bernoulli(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

// SplitMix64 finalizer; a bijective 64-bit mixer.
std::uint64_t mix64(std::uint64_t x);

}  // namespace evaug
