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

#ifndef ADAMAC_SIMULATOR_H_
#define ADAMAC_SIMULATOR_H_

#include <cstdint>
#include <functional>
#include <map>
#include <utility>

#include "adamac/sim_time.h"

namespace adamac {

// Entity addressing for events. The coordinator is entity 0, devices are
// 1..N, the channel uses kChannelEntity.
using EntityId = uint32_t;
inline constexpr EntityId kChannelEntity = 0xFFFFFFFFu;

enum class EventKind : uint8_t {
  kGeneric,
  kBeacon,
  kSlot,
  kBackoff,
  kCca,
  kTxStart,
  kTxEnd,
  kAckTimeout,
  kTraffic,
  kWindow,
};

struct EventHandle {
  SimTime fire_at;
  uint64_t seq = 0;
  bool valid() const { return seq != 0; }
};

// Single-threaded discrete-event kernel. Events fire in (fire_at, seq) order,
// seq being the insertion counter, so delivery order never depends on
// container internals.
class Simulator {
 public:
  using Action = std::function<void()>;

  SimTime Now() const { return now_; }

  // Aborts the process if `at` lies before Now().
  EventHandle Schedule(SimTime at, EntityId target, EventKind kind, Action action);
  EventHandle ScheduleIn(SimTime delay, EntityId target, EventKind kind, Action action) {
    return Schedule(now_ + delay, target, kind, std::move(action));
  }

  // True iff the event was still pending.
  bool Cancel(const EventHandle& handle);

  // Processes every event with fire_at <= t_end, then leaves the clock at
  // t_end. Returns the number of events processed.
  uint64_t RunUntil(SimTime t_end);

  std::size_t pending() const { return queue_.size(); }
  uint64_t processed() const { return processed_; }

 private:
  struct Event {
    EntityId target;
    EventKind kind;
    Action action;
  };
  using Key = std::pair<uint64_t, uint64_t>;  // (fire_at symbols, seq)

  SimTime now_;
  uint64_t next_seq_ = 1;
  uint64_t processed_ = 0;
  std::map<Key, Event> queue_;
};

}  // namespace adamac

#endif  // ADAMAC_SIMULATOR_H_
