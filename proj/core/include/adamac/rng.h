// Copyright 2026 The Ada-MAC Simulator Authors
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

#ifndef ADAMAC_RNG_H_
#define ADAMAC_RNG_H_

#include <cstdint>
#include <random>

namespace adamac {

// Purposes of per-device sub-streams. Each (device, purpose) pair owns an
// independent stream, so adding a device or a traffic class never shifts the
// draws of another.
enum class StreamPurpose : uint32_t {
  kBurst = 1,
  kPeriodic = 2,
  kNormal = 3,
  kBackoff = 4,
  kCommandBackoff = 5,
};

uint64_t SplitMix64(uint64_t x);

// Reproducible random stream.
//
// Engine: std::mt19937_64, whose output sequence is fixed by the C++
// standard. The value transforms below are implemented here rather than with
// <random> distributions, whose algorithms differ between standard
// libraries.
class RngStream {
 public:
  explicit RngStream(uint64_t seed) : seed_(seed), engine_(SplitMix64(seed)) {}
  RngStream(uint64_t seed, uint32_t device, StreamPurpose purpose)
      : RngStream(DeriveSeed(seed, device, purpose)) {}

  static uint64_t DeriveSeed(uint64_t seed, uint32_t device, StreamPurpose purpose);

  uint64_t seed() const { return seed_; }

  uint64_t NextU64() { return engine_(); }
  // Uniform in [0, 1) with 53 random bits.
  double UniformReal();
  // Uniform integer in [lo, hi], unbiased (rejection sampling).
  uint64_t UniformInt(uint64_t lo, uint64_t hi);
  // Exponential with the given mean (inverse transform).
  double Exponential(double mean);
  // Number of Bernoulli(p) trials up to and including the first success;
  // p in (0, 1].
  uint64_t Geometric(double p);

 private:
  uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace adamac

#endif  // ADAMAC_RNG_H_
