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

#include <gtest/gtest.h>

#include "adamac/priority_queues.h"

namespace adamac {
namespace {

QueuedFrame F(uint64_t id, TrafficClass c) {
  QueuedFrame q;
  q.id = id;
  q.frame.traffic_class = c;
  return q;
}

TEST(PriorityQueues, FreshSetIsEmpty) {
  PriorityQueueSet q;
  EXPECT_EQ(q.pending_counts(), (PendingCounts{0, 0}));
  EXPECT_FALSE(q.DequeueCfp());
  EXPECT_FALSE(q.DequeueCap());
}

TEST(PriorityQueues, BurstLeavesFirstInCfp) {
  PriorityQueueSet q;
  q.ClassifyAndEnqueue(F(1, TrafficClass::kPeriodic));
  q.ClassifyAndEnqueue(F(2, TrafficClass::kBurst));
  EXPECT_EQ(q.queue(TrafficClass::kBurst).front().id, 2u);
  EXPECT_EQ(q.DequeueCfp()->id, 2u);
  EXPECT_EQ(q.DequeueCfp()->id, 1u);
  EXPECT_FALSE(q.DequeueCfp());
}

TEST(PriorityQueues, CfpNeverServesNormalAndCapNeverServesRealTime) {
  PriorityQueueSet q;
  q.ClassifyAndEnqueue(F(1, TrafficClass::kNormal));
  EXPECT_FALSE(q.DequeueCfp());
  q.ClassifyAndEnqueue(F(2, TrafficClass::kBurst));
  EXPECT_EQ(q.DequeueCap()->id, 1u);
  EXPECT_FALSE(q.DequeueCap());
  EXPECT_EQ(q.DequeueCap(true)->id, 2u);
}

TEST(PriorityQueues, PendingCountsTrackRealTimeQueues) {
  PriorityQueueSet q;
  q.ClassifyAndEnqueue(F(1, TrafficClass::kBurst));
  q.ClassifyAndEnqueue(F(2, TrafficClass::kBurst));
  q.ClassifyAndEnqueue(F(3, TrafficClass::kNormal));
  EXPECT_EQ(q.pending_counts(), (PendingCounts{2, 0}));
  q.DequeueCfp();
  EXPECT_EQ(q.pending_counts(), (PendingCounts{1, 0}));
}

TEST(PriorityQueues, TailDropAtCapacity) {
  PriorityQueueSet q(10);
  for (uint64_t i = 0; i < 10; ++i) EXPECT_EQ(q.ClassifyAndEnqueue(F(i, TrafficClass::kNormal)), EnqueueResult::kAccepted);
  EXPECT_EQ(q.ClassifyAndEnqueue(F(10, TrafficClass::kNormal)), EnqueueResult::kDroppedOverflow);
  EXPECT_EQ(q.size(TrafficClass::kNormal), 10u);
  EXPECT_EQ(q.queue(TrafficClass::kNormal).back().id, 9u);
  EXPECT_EQ(q.accepted(TrafficClass::kNormal) + q.dropped(TrafficClass::kNormal), 11u);
  // Other classes are unaffected.
  EXPECT_EQ(q.ClassifyAndEnqueue(F(11, TrafficClass::kBurst)), EnqueueResult::kAccepted);
}

TEST(PriorityQueues, PerClassFifoUnderInterleaving) {
  PriorityQueueSet q(100);
  const TrafficClass pattern[] = {TrafficClass::kBurst, TrafficClass::kNormal, TrafficClass::kPeriodic,
                                  TrafficClass::kNormal, TrafficClass::kBurst, TrafficClass::kPeriodic};
  for (uint64_t i = 0; i < 60; ++i) q.ClassifyAndEnqueue(F(i, pattern[i % 6]));
  uint64_t last_burst = 0, last_periodic = 0, last_normal = 0;
  bool first_b = true, first_p = true, first_n = true;
  for (int k = 0; k < 60; ++k) {
    auto f = (k % 3 == 0) ? q.DequeueCap() : q.DequeueCfp();
    if (!f) f = q.DequeueStrictPriority();
    ASSERT_TRUE(f);
    uint64_t* last = nullptr;
    bool* first = nullptr;
    switch (f->frame.traffic_class) {
      case TrafficClass::kBurst: last = &last_burst; first = &first_b; break;
      case TrafficClass::kPeriodic: last = &last_periodic; first = &first_p; break;
      case TrafficClass::kNormal: last = &last_normal; first = &first_n; break;
    }
    if (!*first) {
      EXPECT_GT(f->id, *last);
    }
    *first = false;
    *last = f->id;
  }
}

TEST(PriorityQueues, RequeueGoesToTheHead) {
  PriorityQueueSet q(2);
  q.ClassifyAndEnqueue(F(1, TrafficClass::kPeriodic));
  q.ClassifyAndEnqueue(F(2, TrafficClass::kPeriodic));
  auto head = q.DequeueCfp();
  EXPECT_TRUE(q.Requeue(*head));
  EXPECT_EQ(q.queue(TrafficClass::kPeriodic).front().id, 1u);
  EXPECT_FALSE(q.Requeue(F(3, TrafficClass::kPeriodic)));
  EXPECT_EQ(q.size(TrafficClass::kPeriodic), 2u);
}

TEST(PriorityQueues, StrictPriorityOrder) {
  PriorityQueueSet q;
  q.ClassifyAndEnqueue(F(1, TrafficClass::kNormal));
  q.ClassifyAndEnqueue(F(2, TrafficClass::kPeriodic));
  q.ClassifyAndEnqueue(F(3, TrafficClass::kBurst));
  EXPECT_EQ(q.DequeueStrictPriority()->id, 3u);
  EXPECT_EQ(q.DequeueStrictPriority()->id, 2u);
  EXPECT_EQ(q.DequeueStrictPriority()->id, 1u);
}

TEST(FifoQueue, SingleQueueIgnoresClass) {
  FifoQueue q(2);
  q.Enqueue(F(1, TrafficClass::kNormal));
  q.Enqueue(F(2, TrafficClass::kBurst));
  EXPECT_EQ(q.Enqueue(F(3, TrafficClass::kBurst)), EnqueueResult::kDroppedOverflow);
  EXPECT_EQ(q.Dequeue()->id, 1u);
  EXPECT_EQ(q.Dequeue()->id, 2u);
  EXPECT_FALSE(q.Dequeue());
}

}  // namespace
}  // namespace adamac
