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

#include "adamac/rng.h"

#include <cmath>
#include <limits>

namespace adamac {

uint64_t SplitMix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

uint64_t RngStream::DeriveSeed(uint64_t seed, uint32_t device, StreamPurpose purpose) {
  uint64_t h = SplitMix64(seed);
  h = SplitMix64(h ^ (static_cast<uint64_t>(device) << 32));
  return SplitMix64(h ^ static_cast<uint64_t>(purpose));
}

double RngStream::UniformReal() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

uint64_t RngStream::UniformInt(uint64_t lo, uint64_t hi) {
  if (hi <= lo) return lo;
  const uint64_t span = hi - lo;
  if (span == std::numeric_limits<uint64_t>::max()) return engine_();
  const uint64_t range = span + 1;
  // Largest multiple of range that fits; values at or above it are rejected.
  const uint64_t limit = std::numeric_limits<uint64_t>::max() - (std::numeric_limits<uint64_t>::max() % range);
  uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + x % range;
}

double RngStream::Exponential(double mean) {
  return -mean * std::log1p(-UniformReal());
}

uint64_t RngStream::Geometric(double p) {
  if (p >= 1.0) return 1;
  const double u = 1.0 - UniformReal();  // (0, 1]
  const double k = std::floor(std::log(u) / std::log1p(-p));
  if (!(k < 9.0e18)) return std::numeric_limits<uint64_t>::max();
  return static_cast<uint64_t>(k) + 1;
}

}  // namespace adamac
