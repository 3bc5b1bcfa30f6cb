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

#include <benchmark/benchmark.h>

#include <vector>

#include "adamac/gts_allocator.h"
#include "adamac/rng.h"

namespace adamac {
namespace {

std::vector<GtsRequestFrame> Requests(int n, uint64_t seed) {
  RngStream rng(seed);
  std::vector<GtsRequestFrame> out;
  for (int i = 0; i < n; ++i) {
    GtsRequestFrame r;
    r.mac_address = static_cast<ShortAddress>(i + 1);
    r.length = static_cast<uint8_t>(rng.UniformInt(1, 8));
    r.burst = static_cast<uint8_t>(rng.UniformInt(0, 4));
    r.periodic = static_cast<uint8_t>(rng.UniformInt(0, 4));
    out.push_back(r);
  }
  return out;
}

void BM_Allocate(benchmark::State& state) {
  const auto requests = Requests(static_cast<int>(state.range(0)), 42);
  for (auto _ : state) {
    GtsSchedule s = Allocate(requests, 48);
    benchmark::DoNotOptimize(s);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Allocate)->Arg(1)->Arg(4)->Arg(16)->Arg(22);

void BM_RequestTableUpsert(benchmark::State& state) {
  const auto requests = Requests(16, 7);
  for (auto _ : state) {
    RequestTable t;
    for (const auto& r : requests) t.Upsert(r);
    benchmark::DoNotOptimize(t.size());
  }
}
BENCHMARK(BM_RequestTableUpsert);

}  // namespace
}  // namespace adamac
