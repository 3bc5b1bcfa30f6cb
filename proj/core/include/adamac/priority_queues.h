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

#ifndef ADAMAC_PRIORITY_QUEUES_H_
#define ADAMAC_PRIORITY_QUEUES_H_

#include <array>
#include <cstdint>
#include <deque>
#include <optional>

#include "adamac/frames.h"

namespace adamac {

// A data frame plus the collector id used for delay/loss bookkeeping. The id
// never goes on the wire.
struct QueuedFrame {
  uint64_t id = 0;
  DataFrame frame;
};

enum class EnqueueResult { kAccepted, kDroppedOverflow };

struct PendingCounts {
  std::size_t burst = 0;
  std::size_t periodic = 0;
  bool operator==(const PendingCounts&) const = default;
};

// Three bounded FIFO queues (burst, periodic, normal). Overflow tail-drops
// the arriving frame.
class PriorityQueueSet {
 public:
  explicit PriorityQueueSet(std::size_t capacity_per_queue = 10) : capacity_(capacity_per_queue) {}

  EnqueueResult ClassifyAndEnqueue(QueuedFrame frame);

  // Burst head, else periodic head. Never returns normal frames.
  std::optional<QueuedFrame> DequeueCfp();
  // Normal head only; real-time frames wait for a GTS.
  std::optional<QueuedFrame> DequeueCap();
  // Normal head, then real-time heads if `allow_real_time`.
  std::optional<QueuedFrame> DequeueCap(bool allow_real_time);
  // Burst, periodic, normal in strict priority order.
  std::optional<QueuedFrame> DequeueStrictPriority();

  // Puts a frame back at the head of its class queue. Returns false (and
  // leaves the queue untouched) if the queue is full.
  bool Requeue(QueuedFrame frame);

  PendingCounts pending_counts() const;
  std::size_t size(TrafficClass c) const { return queues_[Index(c)].size(); }
  std::size_t total_size() const;
  std::size_t capacity() const { return capacity_; }
  bool empty() const { return total_size() == 0; }

  const std::deque<QueuedFrame>& queue(TrafficClass c) const { return queues_[Index(c)]; }

  uint64_t accepted(TrafficClass c) const { return accepted_[Index(c)]; }
  uint64_t dropped(TrafficClass c) const { return dropped_[Index(c)]; }

 private:
  static std::size_t Index(TrafficClass c) { return static_cast<std::size_t>(c); }
  std::optional<QueuedFrame> PopFront(TrafficClass c);

  std::size_t capacity_;
  std::array<std::deque<QueuedFrame>, kNumTrafficClasses> queues_;
  std::array<uint64_t, kNumTrafficClasses> accepted_{};
  std::array<uint64_t, kNumTrafficClasses> dropped_{};
};

// Single FIFO used by the alternative baseline discipline.
class FifoQueue {
 public:
  explicit FifoQueue(std::size_t capacity = 10) : capacity_(capacity) {}
  EnqueueResult Enqueue(QueuedFrame frame);
  std::optional<QueuedFrame> Dequeue();
  std::size_t size() const { return q_.size(); }

 private:
  std::size_t capacity_;
  std::deque<QueuedFrame> q_;
};

}  // namespace adamac

#endif  // ADAMAC_PRIORITY_QUEUES_H_
