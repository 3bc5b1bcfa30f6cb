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

#ifndef ADAMAC_SUPERFRAME_H_
#define ADAMAC_SUPERFRAME_H_

#include <cstdint>

#include "adamac/sim_time.h"

namespace adamac {

inline constexpr uint64_t kBaseSuperframeSymbols = 960;
inline constexpr SimTime kBackoffPeriod{20};
inline constexpr SimTime kCcaDuration{8};
inline constexpr SimTime kTurnaround{12};

struct SuperframeConfig {
  int beacon_order = 4;
  int superframe_order = 4;
  int mini_slots = 64;
  // Upper bound on the CFP; the rest of the active period stays CAP.
  int max_cfp_mini_slots = 48;
  // Tail of the CAP reserved for GTS request commands.
  int request_window_mini_slots = 8;

  SimTime superframe_duration() const { return SimTime(kBaseSuperframeSymbols << superframe_order); }
  SimTime beacon_interval() const { return SimTime(kBaseSuperframeSymbols << beacon_order); }
  SimTime mini_slot() const { return SimTime(superframe_duration().symbols() / mini_slots); }
  // Mini-slots that fit completely between the end of a beacon of the given
  // airtime and the end of the active period.
  int usable_mini_slots(SimTime beacon_airtime) const {
    return static_cast<int>((superframe_duration() - beacon_airtime).symbols() / mini_slot().symbols());
  }
};

// Absolute timing of one superframe. Mini-slot 1 begins right after the
// beacon; a trailing partial slot is never used.
class SuperframeTiming {
 public:
  SuperframeTiming() = default;
  SuperframeTiming(const SuperframeConfig& config, SimTime start, SimTime beacon_airtime, int cfp_mini_slots)
      : start_(start),
        beacon_end_(start + beacon_airtime),
        mini_slot_(config.mini_slot()),
        active_end_(start + config.superframe_duration()),
        next_beacon_(start + config.beacon_interval()),
        request_window_start_(active_end_ - config.mini_slot() * static_cast<uint64_t>(config.request_window_mini_slots)),
        cfp_mini_slots_(cfp_mini_slots) {}

  SimTime start() const { return start_; }
  SimTime beacon_end() const { return beacon_end_; }
  SimTime active_end() const { return active_end_; }
  SimTime next_beacon() const { return next_beacon_; }
  SimTime mini_slot() const { return mini_slot_; }
  int cfp_mini_slots() const { return cfp_mini_slots_; }

  // slot is 1-based.
  SimTime slot_start(int slot) const { return beacon_end_ + mini_slot_ * static_cast<uint64_t>(slot - 1); }
  SimTime slot_end(int slot) const { return slot_start(slot) + mini_slot_; }
  SimTime cfp_end() const { return slot_start(cfp_mini_slots_ + 1); }
  SimTime request_window_start() const { return request_window_start_; }

 private:
  SimTime start_;
  SimTime beacon_end_;
  SimTime mini_slot_;
  SimTime active_end_;
  SimTime next_beacon_;
  SimTime request_window_start_;
  int cfp_mini_slots_ = 0;
};

}  // namespace adamac

#endif  // ADAMAC_SUPERFRAME_H_
