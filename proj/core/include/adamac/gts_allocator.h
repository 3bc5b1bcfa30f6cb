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

#ifndef ADAMAC_GTS_ALLOCATOR_H_
#define ADAMAC_GTS_ALLOCATOR_H_

#include <span>
#include <stdexcept>
#include <vector>

#include "adamac/frames.h"

namespace adamac {

// GTS requests collected by the coordinator during one CAP. At most one entry
// per address; a later request from the same device replaces the earlier one.
class RequestTable {
 public:
  void Upsert(const GtsRequestFrame& request);
  void Clear() { entries_.clear(); }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  const std::vector<GtsRequestFrame>& entries() const { return entries_; }

 private:
  std::vector<GtsRequestFrame> entries_;
};

struct GtsSchedule {
  // Grant order: granted entries tile [1, cfp_length] contiguously, denied
  // entries follow with start_slot == 0.
  std::vector<GtsDescriptor> entries;
  int cfp_length = 0;
  bool operator==(const GtsSchedule&) const = default;
};

class AllocationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Mini-slot assignment. Repeatedly picks the pending request with the most
// burst frames, then the most periodic frames, then the lowest address, and
// assigns it the next free mini-slots starting at slot 1. A grant that would
// run past `max_slot` is shortened to end there; requests picked after the
// CFP is full get start_slot 0.
//
// Throws AllocationError on duplicate addresses, zero lengths or a max_slot
// outside [1, 64].
GtsSchedule Allocate(std::span<const GtsRequestFrame> requests, int max_slot);
inline GtsSchedule Allocate(const RequestTable& table, int max_slot) {
  return Allocate(std::span<const GtsRequestFrame>(table.entries()), max_slot);
}

}  // namespace adamac

#endif  // ADAMAC_GTS_ALLOCATOR_H_
