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

#include "adamac/coordinator_mac.h"

#include <algorithm>

namespace adamac {

CoordinatorMac::CoordinatorMac(Simulator& sim, RadioChannel& channel, const MacConfig& config)
    : sim_(sim), channel_(channel), config_(config) {}

void CoordinatorMac::Start(SimTime first_beacon) {
  sim_.Schedule(first_beacon, kCoordinatorEntity, EventKind::kBeacon, [this] { OnSuperframeStart(); });
}

BeaconFrame CoordinatorMac::BuildBeacon() {
  BeaconFrame beacon;
  beacon.beacon_seq = beacon_seq_++;
  beacon.spec.beacon_order = static_cast<uint8_t>(config_.superframe.beacon_order);
  beacon.spec.superframe_order = static_cast<uint8_t>(config_.superframe.superframe_order);
  if (config_.protocol == Protocol::kAdaMac && !requests_.empty()) {
    const GtsSchedule schedule = Allocate(requests_, config_.superframe.max_cfp_mini_slots);
    beacon.spec.cfp_mini_slots = static_cast<uint8_t>(schedule.cfp_length);
    beacon.gts_list = schedule.entries;
    for (const GtsDescriptor& d : schedule.entries) {
      if (d.granted()) {
        ++stats_.gts_granted;
      } else {
        ++stats_.gts_denied;
      }
    }
  }
  beacon.spec.cap_start_mini_slot = beacon.spec.cfp_mini_slots;
  requests_.Clear();
  return beacon;
}

void CoordinatorMac::OnSuperframeStart() {
  const SimTime now = sim_.Now();
  if (last_beacon_time_ && now - *last_beacon_time_ != config_.superframe.beacon_interval()) {
    ++stats_.beacon_cadence_violations;
  }
  last_beacon_time_ = now;

  BeaconFrame beacon = BuildBeacon();
  stats_.max_cfp_mini_slots = std::max<int>(stats_.max_cfp_mini_slots, beacon.spec.cfp_mini_slots);
  const SimTime end = channel_.BeginTransmit(kCoordinatorEntity, Encode(beacon));
  cfp_start_ = end;
  cfp_end_ = end + config_.superframe.mini_slot() * beacon.spec.cfp_mini_slots;
  channel_.SetCfpWindow(cfp_start_, cfp_end_);
  last_beacon_ = std::move(beacon);
  ++stats_.beacons_sent;

  sim_.Schedule(now + config_.superframe.beacon_interval(), kCoordinatorEntity, EventKind::kBeacon,
                [this] { OnSuperframeStart(); });
}

void CoordinatorMac::OnFrame(const Frame& frame, EntityId /*sender*/, SimTime start, SimTime /*end*/) {
  if (const auto* data = std::get_if<DataFrame>(&frame)) {
    if (data->dst != kCoordinatorAddress) return;
    const auto cls = static_cast<std::size_t>(data->traffic_class);
    if (start >= cfp_start_ && start < cfp_end_) {
      ++stats_.cfp_frames[cls];
    } else {
      ++stats_.cap_frames[cls];
    }
    SendAck(data->seq, data->src);
  } else if (const auto* req = std::get_if<GtsRequestFrame>(&frame)) {
    ++stats_.requests_received;
    if (config_.protocol == Protocol::kAdaMac) requests_.Upsert(*req);
    SendAck(req->seq, req->mac_address);
  }
}

void CoordinatorMac::SendAck(uint8_t seq, ShortAddress dst) {
  sim_.ScheduleIn(kTurnaround, kCoordinatorEntity, EventKind::kTxStart, [this, seq, dst] {
    if (channel_.IsTransmitting(kCoordinatorEntity)) return;
    AckFrame ack;
    ack.seq = seq;
    ack.dst = dst;
    channel_.BeginTransmit(kCoordinatorEntity, Encode(ack));
    ++stats_.acks_sent;
  });
}

}  // namespace adamac
