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

#include "adamac/simulator.h"

#include <cstdio>
#include <cstdlib>

namespace adamac {

EventHandle Simulator::Schedule(SimTime at, EntityId target, EventKind kind, Action action) {
  if (at < now_) {
    std::fprintf(stderr,
                 "adamac: event for entity %u scheduled in the past (at=%llu, now=%llu)\n",
                 target, static_cast<unsigned long long>(at.symbols()),
                 static_cast<unsigned long long>(now_.symbols()));
    std::abort();
  }
  const uint64_t seq = next_seq_++;
  queue_.emplace(Key{at.symbols(), seq}, Event{target, kind, std::move(action)});
  return EventHandle{at, seq};
}

bool Simulator::Cancel(const EventHandle& handle) {
  if (!handle.valid()) return false;
  return queue_.erase(Key{handle.fire_at.symbols(), handle.seq}) > 0;
}

uint64_t Simulator::RunUntil(SimTime t_end) {
  uint64_t count = 0;
  while (!queue_.empty()) {
    auto it = queue_.begin();
    if (it->first.first > t_end.symbols()) break;
    now_ = SimTime(it->first.first);
    Action action = std::move(it->second.action);
    queue_.erase(it);
    ++count;
    ++processed_;
    if (action) action();
  }
  if (now_ < t_end) now_ = t_end;
  return count;
}

}  // namespace adamac
