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

#ifndef ADAMAC_TRAFFIC_H_
#define ADAMAC_TRAFFIC_H_

#include <cstdint>
#include <functional>
#include <string_view>

#include "adamac/frames.h"
#include "adamac/rng.h"
#include "adamac/sim_time.h"
#include "adamac/simulator.h"

namespace adamac {

enum class BurstTick { kMiniSlot, kBackoffPeriod };
std::string_view ToString(BurstTick t);

struct TrafficProfile {
  // Probability of a burst frame per tick per device.
  double p_burst = 0.002;
  BurstTick burst_tick = BurstTick::kMiniSlot;
  double periodic_interval_s = 0.3;
  // Exponential inter-arrival by default; fixed period (with a random
  // initial phase) when set.
  bool periodic_deterministic = false;
  double normal_interval_s = 0.05;
  bool normal_enabled = true;
};

// Application sources of one device. Burst frames follow a Bernoulli process
// on tick boundaries (sampled by geometric gaps between successes, which is
// the same process); periodic and normal frames have exponential
// inter-arrival times.
class TrafficSource {
 public:
  // Called at the creation instant with the frame's class.
  using Sink = std::function<void(TrafficClass)>;

  TrafficSource(Simulator& sim, EntityId device, uint64_t seed, TrafficProfile profile, SimTime burst_tick, Sink sink);
  TrafficSource(const TrafficSource&) = delete;
  TrafficSource& operator=(const TrafficSource&) = delete;

  // Schedules the first arrival of every enabled stream.
  void Start();

  uint64_t burst_ticks_elapsed(SimTime now) const { return now.symbols() / tick_.symbols(); }

 private:
  void ScheduleBurst();
  void SchedulePeriodic(bool first);
  void ScheduleNormal();

  Simulator& sim_;
  EntityId device_;
  TrafficProfile profile_;
  SimTime tick_;
  Sink sink_;
  RngStream burst_rng_;
  RngStream periodic_rng_;
  RngStream normal_rng_;
  uint64_t burst_tick_index_ = 0;
};

}  // namespace adamac

#endif  // ADAMAC_TRAFFIC_H_
