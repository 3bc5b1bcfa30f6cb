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

#ifndef ADAMAC_RADIO_CHANNEL_H_
#define ADAMAC_RADIO_CHANNEL_H_

#include <cstdint>
#include <map>
#include <vector>

#include "adamac/frames.h"
#include "adamac/simulator.h"

namespace adamac {

// Receive side of a radio attached to the channel.
class RadioReceiver {
 public:
  virtual ~RadioReceiver() = default;
  // A frame that overlapped no other transmission, decoded. `start`/`end`
  // bound its airtime; the call happens at `end`.
  virtual void OnFrame(const Frame& frame, EntityId sender, SimTime start, SimTime end) = 0;
  // A transmission destroyed by overlap. Default: silently lost.
  virtual void OnCollision(EntityId /*sender*/, SimTime /*start*/, SimTime /*end*/) {}
};

struct Transmission {
  uint64_t id = 0;
  EntityId sender = 0;
  std::vector<uint8_t> bytes;
  SimTime start;
  SimTime duration;
  bool collided = false;
  bool in_cfp = false;
  SimTime end() const { return start + duration; }
};

struct ChannelStats {
  uint64_t transmissions = 0;
  uint64_t delivered = 0;
  // Transmissions destroyed by overlap, split by the period they started in.
  uint64_t collided_cfp = 0;
  uint64_t collided_cap = 0;
  uint64_t decode_errors = 0;
  // Pairs of transmissions that overlapped inside the CFP.
  uint64_t cfp_overlaps = 0;
};

// Single collision domain with zero propagation delay, no noise and no
// capture: any two overlapping transmissions destroy each other at every
// receiver. Busy intervals are half-open [start, end).
class RadioChannel {
 public:
  explicit RadioChannel(Simulator& sim) : sim_(sim) {}
  RadioChannel(const RadioChannel&) = delete;
  RadioChannel& operator=(const RadioChannel&) = delete;

  void Attach(EntityId id, RadioReceiver* receiver);

  // Starts transmitting now. Returns the time the last symbol leaves the air.
  // Aborts if `sender` is already transmitting.
  SimTime BeginTransmit(EntityId sender, std::vector<uint8_t> bytes);

  // Point sample at `at` (end of the 8-symbol CCA window).
  bool IsBusy(SimTime at) const;
  bool Cca(EntityId /*sampler*/, SimTime at) const { return !IsBusy(at); }

  bool IsTransmitting(EntityId sender) const;

  // Marks [start, end) as contention-free for collision accounting.
  void SetCfpWindow(SimTime start, SimTime end) {
    cfp_start_ = start;
    cfp_end_ = end;
  }

  const ChannelStats& stats() const { return stats_; }

 private:
  void Finish(uint64_t id);

  Simulator& sim_;
  std::map<EntityId, RadioReceiver*> receivers_;
  std::vector<Transmission> active_;
  uint64_t next_id_ = 1;
  SimTime cfp_start_;
  SimTime cfp_end_;
  ChannelStats stats_;
};

}  // namespace adamac

#endif  // ADAMAC_RADIO_CHANNEL_H_
