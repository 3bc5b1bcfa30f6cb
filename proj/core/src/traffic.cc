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

#include "adamac/traffic.h"

#include <limits>

namespace adamac {

std::string_view ToString(BurstTick t) {
  switch (t) {
    case BurstTick::kMiniSlot:
      return "mini_slot";
    case BurstTick::kBackoffPeriod:
      return "backoff_period";
  }
  return "unknown";
}

TrafficSource::TrafficSource(Simulator& sim, EntityId device, uint64_t seed, TrafficProfile profile,
                             SimTime burst_tick, Sink sink)
    : sim_(sim),
      device_(device),
      profile_(profile),
      tick_(burst_tick),
      sink_(std::move(sink)),
      burst_rng_(seed, device, StreamPurpose::kBurst),
      periodic_rng_(seed, device, StreamPurpose::kPeriodic),
      normal_rng_(seed, device, StreamPurpose::kNormal) {}

void TrafficSource::Start() {
  if (profile_.p_burst > 0.0) ScheduleBurst();
  if (profile_.periodic_interval_s > 0.0) SchedulePeriodic(true);
  if (profile_.normal_enabled && profile_.normal_interval_s > 0.0) ScheduleNormal();
}

void TrafficSource::ScheduleBurst() {
  const uint64_t gap = burst_rng_.Geometric(profile_.p_burst);
  if (gap > std::numeric_limits<uint64_t>::max() / tick_.symbols() - burst_tick_index_) return;
  burst_tick_index_ += gap;
  sim_.Schedule(tick_ * burst_tick_index_, device_, EventKind::kTraffic, [this] {
    sink_(TrafficClass::kBurst);
    ScheduleBurst();
  });
}

void TrafficSource::SchedulePeriodic(bool first) {
  SimTime gap;
  if (profile_.periodic_deterministic) {
    gap = first ? SimTime::FromSeconds(periodic_rng_.UniformReal() * profile_.periodic_interval_s)
                : SimTime::FromSeconds(profile_.periodic_interval_s);
  } else {
    gap = SimTime::FromSeconds(periodic_rng_.Exponential(profile_.periodic_interval_s));
  }
  sim_.ScheduleIn(gap, device_, EventKind::kTraffic, [this] {
    sink_(TrafficClass::kPeriodic);
    SchedulePeriodic(false);
  });
}

void TrafficSource::ScheduleNormal() {
  const SimTime gap = SimTime::FromSeconds(normal_rng_.Exponential(profile_.normal_interval_s));
  sim_.ScheduleIn(gap, device_, EventKind::kTraffic, [this] {
    sink_(TrafficClass::kNormal);
    ScheduleNormal();
  });
}

}  // namespace adamac
