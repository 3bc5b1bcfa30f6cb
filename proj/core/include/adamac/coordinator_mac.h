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

#ifndef ADAMAC_COORDINATOR_MAC_H_
#define ADAMAC_COORDINATOR_MAC_H_

#include <array>
#include <cstdint>
#include <optional>

#include "adamac/frames.h"
#include "adamac/gts_allocator.h"
#include "adamac/mac_config.h"
#include "adamac/radio_channel.h"
#include "adamac/simulator.h"

namespace adamac {

inline constexpr EntityId kCoordinatorEntity = 0;

struct CoordinatorStats {
  uint64_t beacons_sent = 0;
  // Consecutive beacons not exactly one beacon interval apart.
  uint64_t beacon_cadence_violations = 0;
  uint64_t requests_received = 0;
  uint64_t gts_granted = 0;
  uint64_t gts_denied = 0;
  uint64_t acks_sent = 0;
  // Data frames received, by class, split by the period they arrived in.
  std::array<uint64_t, kNumTrafficClasses> cfp_frames{};
  std::array<uint64_t, kNumTrafficClasses> cap_frames{};
  int max_cfp_mini_slots = 0;
};

// PAN coordinator: at every superframe start it turns the collected requests
// into a GTS schedule, broadcasts it in the beacon and starts a fresh
// request table; it acknowledges every data frame and request it decodes.
class CoordinatorMac : public RadioReceiver {
 public:
  CoordinatorMac(Simulator& sim, RadioChannel& channel, const MacConfig& config);
  CoordinatorMac(const CoordinatorMac&) = delete;
  CoordinatorMac& operator=(const CoordinatorMac&) = delete;

  // Schedules the first beacon at `first_beacon`.
  void Start(SimTime first_beacon = SimTime(0));

  void OnFrame(const Frame& frame, EntityId sender, SimTime start, SimTime end) override;

  // Beacon contents for the next superframe from the current request table.
  BeaconFrame BuildBeacon();

  const CoordinatorStats& stats() const { return stats_; }
  const RequestTable& request_table() const { return requests_; }
  const std::optional<BeaconFrame>& last_beacon() const { return last_beacon_; }

 private:
  void OnSuperframeStart();
  void SendAck(uint8_t seq, ShortAddress dst);

  Simulator& sim_;
  RadioChannel& channel_;
  const MacConfig& config_;
  RequestTable requests_;
  uint8_t beacon_seq_ = 0;
  std::optional<BeaconFrame> last_beacon_;
  std::optional<SimTime> last_beacon_time_;
  SimTime cfp_start_;
  SimTime cfp_end_;
  CoordinatorStats stats_;
};

}  // namespace adamac

#endif  // ADAMAC_COORDINATOR_MAC_H_
