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

#ifndef ADAMAC_DEVICE_MAC_H_
#define ADAMAC_DEVICE_MAC_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "adamac/csma_ca.h"
#include "adamac/frames.h"
#include "adamac/mac_config.h"
#include "adamac/metrics.h"
#include "adamac/priority_queues.h"
#include "adamac/radio_channel.h"
#include "adamac/simulator.h"
#include "adamac/superframe.h"

namespace adamac {

// What a device knows about the current superframe, derived only from the
// last beacon it decoded.
struct DeviceScheduleView {
  std::optional<GtsDescriptor> my_gts;  // granted descriptors only
  int cfp_end_slot = 0;
  SuperframeTiming timing;
  ContentionWindow cap_window;
  // Ada-MAC only: tail of the CAP where GTS requests are sent.
  std::optional<ContentionWindow> request_window;
  SimTime next_beacon;
};

DeviceScheduleView ViewFromBeacon(const MacConfig& config, const BeaconFrame& beacon, ShortAddress me,
                                  SimTime beacon_start, SimTime beacon_end);

// Length a device asks for given its queued real-time frames.
uint8_t RequestedLength(const PendingCounts& counts, int per_node_slot_cap);

struct DeviceStats {
  uint64_t beacons_received = 0;
  uint64_t gts_grants = 0;
  uint64_t gts_slots_owned = 0;
  uint64_t gts_slots_used = 0;
  uint64_t cfp_ack_timeouts = 0;
  uint64_t requests_started = 0;
  uint64_t requests_acked = 0;
  uint64_t requests_failed = 0;

  DeviceStats& operator+=(const DeviceStats& o);
};

// End device. In Ada-MAC mode it transmits burst/periodic frames in its own
// mini-slots, contends for the CAP with normal frames, and sends a GTS
// request in the request window. In baseline mode every class contends with
// slotted CSMA/CA over the whole active period.
class DeviceMac : public RadioReceiver {
 public:
  DeviceMac(Simulator& sim, RadioChannel& channel, MetricsCollector& metrics, const MacConfig& config,
            EntityId entity, ShortAddress address, uint64_t seed);
  DeviceMac(const DeviceMac&) = delete;
  DeviceMac& operator=(const DeviceMac&) = delete;

  // Application hand-off: records the generation and queues the frame.
  void OnApplicationFrame(TrafficClass c);

  void OnFrame(const Frame& frame, EntityId sender, SimTime start, SimTime end) override;

  ShortAddress address() const { return address_; }
  const PriorityQueueSet& queues() const { return queues_; }
  const std::optional<DeviceScheduleView>& view() const { return view_; }
  const DeviceStats& stats() const { return stats_; }
  const CsmaStats& data_csma_stats() const { return data_csma_.stats(); }
  const CsmaStats& command_csma_stats() const { return command_csma_.stats(); }

 private:
  void OnBeacon(const BeaconFrame& beacon, SimTime start, SimTime end);
  void OnAck(const AckFrame& ack);
  void OnGtsSlot(int slot);
  void OnCfpAckTimeout();
  void StartRequest();
  void KickCap();
  std::optional<QueuedFrame> NextCapFrame();
  uint8_t NextSeq() { return seq_++; }

  Simulator& sim_;
  RadioChannel& channel_;
  MetricsCollector& metrics_;
  const MacConfig& config_;
  EntityId entity_;
  ShortAddress address_;

  PriorityQueueSet queues_;
  FifoQueue fifo_;
  CsmaCa data_csma_;
  CsmaCa command_csma_;
  std::optional<DeviceScheduleView> view_;
  std::vector<EventHandle> superframe_events_;

  std::optional<QueuedFrame> cap_in_service_;
  struct CfpExchange {
    QueuedFrame frame;
    uint8_t seq;
    EventHandle timeout;
  };
  std::optional<CfpExchange> cfp_in_flight_;

  uint8_t seq_ = 0;
  DeviceStats stats_;
};

}  // namespace adamac

#endif  // ADAMAC_DEVICE_MAC_H_
