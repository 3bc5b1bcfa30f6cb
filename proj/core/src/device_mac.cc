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

#include "adamac/device_mac.h"

#include <algorithm>

namespace adamac {

DeviceStats& DeviceStats::operator+=(const DeviceStats& o) {
  beacons_received += o.beacons_received;
  gts_grants += o.gts_grants;
  gts_slots_owned += o.gts_slots_owned;
  gts_slots_used += o.gts_slots_used;
  cfp_ack_timeouts += o.cfp_ack_timeouts;
  requests_started += o.requests_started;
  requests_acked += o.requests_acked;
  requests_failed += o.requests_failed;
  return *this;
}

DeviceScheduleView ViewFromBeacon(const MacConfig& config, const BeaconFrame& beacon, ShortAddress me,
                                  SimTime beacon_start, SimTime beacon_end) {
  DeviceScheduleView view;
  const int cfp = config.protocol == Protocol::kAdaMac ? beacon.spec.cfp_mini_slots : 0;
  view.timing = SuperframeTiming(config.superframe, beacon_start, beacon_end - beacon_start, cfp);
  view.cfp_end_slot = cfp;
  view.next_beacon = view.timing.next_beacon();
  if (config.protocol == Protocol::kAdaMac) {
    for (const GtsDescriptor& d : beacon.gts_list) {
      if (d.mac_address == me && d.granted()) view.my_gts = d;
    }
    const SimTime request_start = view.timing.request_window_start();
    view.cap_window = ContentionWindow{view.timing.cfp_end(), request_start, beacon_start};
    view.request_window = ContentionWindow{request_start, view.timing.active_end(), beacon_start};
  } else {
    view.cap_window = ContentionWindow{view.timing.beacon_end(), view.timing.active_end(), beacon_start};
  }
  return view;
}

uint8_t RequestedLength(const PendingCounts& counts, int per_node_slot_cap) {
  const std::size_t wanted = counts.burst + counts.periodic;
  const std::size_t cap = static_cast<std::size_t>(std::clamp(per_node_slot_cap, 1, kMaxMiniSlots));
  return static_cast<uint8_t>(std::clamp<std::size_t>(wanted, 1, cap));
}

DeviceMac::DeviceMac(Simulator& sim, RadioChannel& channel, MetricsCollector& metrics, const MacConfig& config,
                     EntityId entity, ShortAddress address, uint64_t seed)
    : sim_(sim),
      channel_(channel),
      metrics_(metrics),
      config_(config),
      entity_(entity),
      address_(address),
      queues_(config.queue_capacity),
      fifo_(config.queue_capacity),
      data_csma_(sim, channel, entity, config.csma, RngStream(seed, entity, StreamPurpose::kBackoff)),
      command_csma_(sim, channel, entity, config.csma, RngStream(seed, entity, StreamPurpose::kCommandBackoff)) {}

void DeviceMac::OnApplicationFrame(TrafficClass c) {
  QueuedFrame q;
  q.id = metrics_.RecordGeneration(c, sim_.Now());
  q.frame.src = address_;
  q.frame.dst = kCoordinatorAddress;
  q.frame.traffic_class = c;
  q.frame.gen_time = sim_.Now();
  q.frame.payload_len = config_.msdu_bytes;
  const uint64_t id = q.id;
  const bool single_fifo =
      config_.protocol == Protocol::kCsmaBaseline && config_.baseline_discipline == BaselineDiscipline::kSingleFifo;
  const EnqueueResult r = single_fifo ? fifo_.Enqueue(std::move(q)) : queues_.ClassifyAndEnqueue(std::move(q));
  if (r == EnqueueResult::kDroppedOverflow) {
    metrics_.RecordLost(id, LossCause::kQueueOverflow);
    return;
  }
  KickCap();
}

void DeviceMac::OnFrame(const Frame& frame, EntityId /*sender*/, SimTime start, SimTime end) {
  if (const auto* beacon = std::get_if<BeaconFrame>(&frame)) {
    OnBeacon(*beacon, start, end);
  } else if (const auto* ack = std::get_if<AckFrame>(&frame)) {
    if (ack->dst == address_) OnAck(*ack);
  }
}

void DeviceMac::OnBeacon(const BeaconFrame& beacon, SimTime start, SimTime end) {
  ++stats_.beacons_received;
  for (const EventHandle& h : superframe_events_) sim_.Cancel(h);
  superframe_events_.clear();

  view_ = ViewFromBeacon(config_, beacon, address_, start, end);
  const DeviceScheduleView& v = *view_;

  if (v.my_gts) {
    ++stats_.gts_grants;
    for (int s = v.my_gts->start_slot; s < v.my_gts->start_slot + v.my_gts->length; ++s) {
      ++stats_.gts_slots_owned;
      superframe_events_.push_back(
          sim_.Schedule(v.timing.slot_start(s), entity_, EventKind::kSlot, [this, s] { OnGtsSlot(s); }));
    }
  }

  data_csma_.SetWindow(v.cap_window);
  command_csma_.SetWindow(v.request_window);
  if (v.request_window) {
    superframe_events_.push_back(
        sim_.Schedule(v.request_window->start, entity_, EventKind::kWindow, [this] { StartRequest(); }));
  }
  KickCap();
}

void DeviceMac::OnAck(const AckFrame& ack) {
  if (cfp_in_flight_ && cfp_in_flight_->seq == ack.seq) {
    sim_.Cancel(cfp_in_flight_->timeout);
    metrics_.RecordDelivered(cfp_in_flight_->frame.id, sim_.Now());
    cfp_in_flight_.reset();
    return;
  }
  data_csma_.OnAck(ack.seq);
  command_csma_.OnAck(ack.seq);
}

// Time-triggered transmission: one frame + ACK per owned mini-slot, burst
// before periodic.
void DeviceMac::OnGtsSlot(int /*slot*/) {
  if (cfp_in_flight_) return;
  std::optional<QueuedFrame> next = queues_.DequeueCfp();
  if (!next) return;
  ++stats_.gts_slots_used;
  const uint8_t seq = NextSeq();
  next->frame.seq = seq;
  std::vector<uint8_t> bytes = Encode(next->frame);
  const SimTime end = channel_.BeginTransmit(entity_, std::move(bytes));
  CfpExchange ex{std::move(*next), seq, {}};
  ex.timeout = sim_.Schedule(end + config_.csma.ack_wait, entity_, EventKind::kAckTimeout, [this] { OnCfpAckTimeout(); });
  cfp_in_flight_ = std::move(ex);
}

// Unacknowledged CFP frames go back to the head of their queue for a later
// GTS.
void DeviceMac::OnCfpAckTimeout() {
  if (!cfp_in_flight_) return;
  ++stats_.cfp_ack_timeouts;
  QueuedFrame f = std::move(cfp_in_flight_->frame);
  cfp_in_flight_.reset();
  const uint64_t id = f.id;
  if (!queues_.Requeue(std::move(f))) metrics_.RecordLost(id, LossCause::kRetryFailure);
}

void DeviceMac::StartRequest() {
  const PendingCounts counts = queues_.pending_counts();
  if (counts.burst + counts.periodic == 0 && !config_.request_when_idle) return;
  if (command_csma_.busy()) return;
  ++stats_.requests_started;
  constexpr std::size_t kRequestBytes = 15;
  // Counts are sampled when the command actually goes on air.
  auto build = [this]() {
    const PendingCounts now = queues_.pending_counts();
    GtsRequestFrame req;
    req.mac_address = address_;
    req.length = RequestedLength(now, config_.per_node_slot_cap);
    req.burst = static_cast<uint8_t>(std::min<std::size_t>(now.burst, 255));
    req.periodic = static_cast<uint8_t>(std::min<std::size_t>(now.periodic, 255));
    req.seq = NextSeq();
    return CsmaCa::Built{Encode(req), req.seq};
  };
  command_csma_.Start(kRequestBytes, build, [this](CsmaOutcome outcome) {
    if (outcome == CsmaOutcome::kDelivered) {
      ++stats_.requests_acked;
    } else {
      ++stats_.requests_failed;
    }
  });
}

std::optional<QueuedFrame> DeviceMac::NextCapFrame() {
  if (config_.protocol == Protocol::kAdaMac) return queues_.DequeueCap(config_.real_time_cap_fallback);
  if (config_.baseline_discipline == BaselineDiscipline::kSingleFifo) return fifo_.Dequeue();
  return queues_.DequeueStrictPriority();
}

void DeviceMac::KickCap() {
  if (data_csma_.busy() || !view_) return;
  std::optional<QueuedFrame> next = NextCapFrame();
  if (!next) return;
  next->frame.seq = NextSeq();
  cap_in_service_ = std::move(next);
  std::vector<uint8_t> bytes = Encode(cap_in_service_->frame);
  const std::size_t size = bytes.size();
  const uint8_t seq = cap_in_service_->frame.seq;
  data_csma_.Start(
      size, [bytes = std::move(bytes), seq]() { return CsmaCa::Built{bytes, seq}; },
      [this](CsmaOutcome outcome) {
        const uint64_t id = cap_in_service_->id;
        cap_in_service_.reset();
        switch (outcome) {
          case CsmaOutcome::kDelivered:
            metrics_.RecordDelivered(id, sim_.Now());
            break;
          case CsmaOutcome::kChannelAccessFailure:
            metrics_.RecordLost(id, LossCause::kChannelAccessFailure);
            break;
          case CsmaOutcome::kRetryFailure:
            metrics_.RecordLost(id, LossCause::kRetryFailure);
            break;
        }
        KickCap();
      });
}

}  // namespace adamac
