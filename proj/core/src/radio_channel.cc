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

#include "adamac/radio_channel.h"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <optional>

namespace adamac {

void RadioChannel::Attach(EntityId id, RadioReceiver* receiver) { receivers_[id] = receiver; }

bool RadioChannel::IsTransmitting(EntityId sender) const {
  const SimTime now = sim_.Now();
  return std::any_of(active_.begin(), active_.end(),
                     [&](const Transmission& t) { return t.sender == sender && now < t.end(); });
}

SimTime RadioChannel::BeginTransmit(EntityId sender, std::vector<uint8_t> bytes) {
  if (IsTransmitting(sender)) {
    std::fprintf(stderr, "adamac: entity %u started a transmission while already transmitting\n", sender);
    std::abort();
  }
  Transmission tx;
  tx.id = next_id_++;
  tx.sender = sender;
  tx.start = sim_.Now();
  tx.duration = Airtime(bytes.size());
  tx.bytes = std::move(bytes);
  tx.in_cfp = tx.start >= cfp_start_ && tx.start < cfp_end_;
  for (Transmission& other : active_) {
    if (other.end() > tx.start) {
      if (tx.in_cfp || other.in_cfp) ++stats_.cfp_overlaps;
      other.collided = true;
      tx.collided = true;
    }
  }
  ++stats_.transmissions;
  const SimTime end = tx.end();
  const uint64_t id = tx.id;
  active_.push_back(std::move(tx));
  sim_.Schedule(end, kChannelEntity, EventKind::kTxEnd, [this, id] { Finish(id); });
  return end;
}

bool RadioChannel::IsBusy(SimTime at) const {
  return std::any_of(active_.begin(), active_.end(),
                     [&](const Transmission& t) { return t.start <= at && at < t.end(); });
}

void RadioChannel::Finish(uint64_t id) {
  auto it = std::find_if(active_.begin(), active_.end(), [&](const Transmission& t) { return t.id == id; });
  if (it == active_.end()) return;
  Transmission tx = std::move(*it);
  active_.erase(it);

  if (tx.collided) {
    if (tx.in_cfp) {
      ++stats_.collided_cfp;
    } else {
      ++stats_.collided_cap;
    }
    for (auto& [rid, rx] : receivers_) {
      if (rid != tx.sender) rx->OnCollision(tx.sender, tx.start, tx.end());
    }
    return;
  }

  std::optional<Frame> frame;
  try {
    frame = Decode(tx.bytes);
  } catch (const CodecError&) {
    ++stats_.decode_errors;
    return;
  }
  ++stats_.delivered;
  for (auto& [rid, rx] : receivers_) {
    if (rid != tx.sender) rx->OnFrame(*frame, tx.sender, tx.start, tx.end());
  }
}

}  // namespace adamac
