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

#include "adamac/priority_queues.h"

namespace adamac {

EnqueueResult PriorityQueueSet::ClassifyAndEnqueue(QueuedFrame frame) {
  const std::size_t i = Index(frame.frame.traffic_class);
  if (queues_[i].size() >= capacity_) {
    ++dropped_[i];
    return EnqueueResult::kDroppedOverflow;
  }
  ++accepted_[i];
  queues_[i].push_back(std::move(frame));
  return EnqueueResult::kAccepted;
}

std::optional<QueuedFrame> PriorityQueueSet::PopFront(TrafficClass c) {
  auto& q = queues_[Index(c)];
  if (q.empty()) return std::nullopt;
  QueuedFrame f = std::move(q.front());
  q.pop_front();
  return f;
}

std::optional<QueuedFrame> PriorityQueueSet::DequeueCfp() {
  if (auto f = PopFront(TrafficClass::kBurst)) return f;
  return PopFront(TrafficClass::kPeriodic);
}

std::optional<QueuedFrame> PriorityQueueSet::DequeueCap() { return PopFront(TrafficClass::kNormal); }

std::optional<QueuedFrame> PriorityQueueSet::DequeueCap(bool allow_real_time) {
  if (auto f = PopFront(TrafficClass::kNormal)) return f;
  if (!allow_real_time) return std::nullopt;
  return DequeueCfp();
}

std::optional<QueuedFrame> PriorityQueueSet::DequeueStrictPriority() {
  if (auto f = DequeueCfp()) return f;
  return PopFront(TrafficClass::kNormal);
}

bool PriorityQueueSet::Requeue(QueuedFrame frame) {
  auto& q = queues_[Index(frame.frame.traffic_class)];
  if (q.size() >= capacity_) return false;
  q.push_front(std::move(frame));
  return true;
}

PendingCounts PriorityQueueSet::pending_counts() const {
  return PendingCounts{queues_[Index(TrafficClass::kBurst)].size(), queues_[Index(TrafficClass::kPeriodic)].size()};
}

std::size_t PriorityQueueSet::total_size() const {
  std::size_t n = 0;
  for (const auto& q : queues_) n += q.size();
  return n;
}

EnqueueResult FifoQueue::Enqueue(QueuedFrame frame) {
  if (q_.size() >= capacity_) return EnqueueResult::kDroppedOverflow;
  q_.push_back(std::move(frame));
  return EnqueueResult::kAccepted;
}

std::optional<QueuedFrame> FifoQueue::Dequeue() {
  if (q_.empty()) return std::nullopt;
  QueuedFrame f = std::move(q_.front());
  q_.pop_front();
  return f;
}

}  // namespace adamac
