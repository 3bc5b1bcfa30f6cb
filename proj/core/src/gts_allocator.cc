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

#include "adamac/gts_allocator.h"

#include <algorithm>
#include <set>
#include <string>

namespace adamac {

void RequestTable::Upsert(const GtsRequestFrame& request) {
  for (GtsRequestFrame& e : entries_) {
    if (e.mac_address == request.mac_address) {
      e = request;
      return;
    }
  }
  entries_.push_back(request);
}

namespace {

// True if `a` must be served before `b`.
bool Precedes(const GtsRequestFrame& a, const GtsRequestFrame& b) {
  if (a.burst != b.burst) return a.burst > b.burst;
  if (a.periodic != b.periodic) return a.periodic > b.periodic;
  return a.mac_address < b.mac_address;
}

}  // namespace

GtsSchedule Allocate(std::span<const GtsRequestFrame> requests, int max_slot) {
  if (max_slot < 1 || max_slot > kMaxMiniSlots) {
    throw AllocationError("max_slot must be in [1, 64], got " + std::to_string(max_slot));
  }
  std::set<ShortAddress> seen;
  for (const GtsRequestFrame& r : requests) {
    if (!seen.insert(r.mac_address).second) {
      throw AllocationError("duplicate request for address " + std::to_string(r.mac_address));
    }
    if (r.length == 0) throw AllocationError("zero-length request from address " + std::to_string(r.mac_address));
  }

  std::vector<GtsRequestFrame> pending(requests.begin(), requests.end());
  GtsSchedule schedule;
  schedule.entries.reserve(pending.size());
  int cursor = 1;

  while (!pending.empty()) {
    std::size_t index = 0;
    for (std::size_t i = 1; i < pending.size(); ++i) {
      if (Precedes(pending[i], pending[index])) index = i;
    }
    const GtsRequestFrame& chosen = pending[index];
    GtsDescriptor grant;
    grant.mac_address = chosen.mac_address;
    if (cursor <= max_slot) {
      const int length = std::min<int>(chosen.length, max_slot - cursor + 1);
      grant.start_slot = static_cast<uint8_t>(cursor);
      grant.length = static_cast<uint8_t>(length);
      cursor += length;
    } else {
      grant.start_slot = 0;
      grant.length = chosen.length;
    }
    schedule.entries.push_back(grant);
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(index));
  }
  schedule.cfp_length = cursor - 1;
  return schedule;
}

}  // namespace adamac
