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

#include <vector>

#include "adamac/radio_channel.h"

namespace adamac {
namespace {

struct Recorder : RadioReceiver {
  std::vector<Frame> frames;
  std::vector<SimTime> ends;
  int collisions = 0;
  void OnFrame(const Frame& f, EntityId, SimTime, SimTime end) override {
    frames.push_back(f);
    ends.push_back(end);
  }
  void OnCollision(EntityId, SimTime, SimTime) override { ++collisions; }
};

std::vector<uint8_t> DataBytes(ShortAddress src) {
  DataFrame d;
  d.src = src;
  return Encode(d);
}

TEST(Channel, DataFrameTakes134Symbols) {
  Simulator sim;
  RadioChannel ch(sim);
  Recorder rx;
  ch.Attach(0, &rx);
  SimTime end = ch.BeginTransmit(1, DataBytes(1));
  EXPECT_EQ(end, SimTime(134));
  sim.RunUntil(SimTime(1000));
  ASSERT_EQ(rx.frames.size(), 1u);
  EXPECT_EQ(rx.ends[0], SimTime(134));
  EXPECT_EQ(ch.stats().delivered, 1u);
}

TEST(Channel, AckTakes34Symbols) {
  Simulator sim;
  RadioChannel ch(sim);
  EXPECT_EQ(ch.BeginTransmit(0, Encode(AckFrame{})), SimTime(34));
}

TEST(Channel, SenderDoesNotHearItself) {
  Simulator sim;
  RadioChannel ch(sim);
  Recorder a, b;
  ch.Attach(1, &a);
  ch.Attach(2, &b);
  ch.BeginTransmit(1, DataBytes(1));
  sim.RunUntil(SimTime(500));
  EXPECT_TRUE(a.frames.empty());
  EXPECT_EQ(b.frames.size(), 1u);
}

TEST(Channel, OverlapDestroysBoth) {
  Simulator sim;
  RadioChannel ch(sim);
  Recorder rx;
  ch.Attach(0, &rx);
  ch.BeginTransmit(1, DataBytes(1));
  sim.Schedule(SimTime(100), 9, EventKind::kGeneric, [&] { ch.BeginTransmit(2, DataBytes(2)); });
  sim.RunUntil(SimTime(1000));
  EXPECT_TRUE(rx.frames.empty());
  EXPECT_EQ(rx.collisions, 2);
  EXPECT_EQ(ch.stats().collided_cap, 2u);
  EXPECT_EQ(ch.stats().collided_cfp, 0u);
}

TEST(Channel, BackToBackIsNotACollision) {
  Simulator sim;
  RadioChannel ch(sim);
  Recorder rx;
  ch.Attach(0, &rx);
  ch.BeginTransmit(1, DataBytes(1));
  sim.Schedule(SimTime(134), 9, EventKind::kGeneric, [&] { ch.BeginTransmit(2, DataBytes(2)); });
  sim.RunUntil(SimTime(1000));
  EXPECT_EQ(rx.frames.size(), 2u);
}

TEST(Channel, CcaIsHalfOpen) {
  Simulator sim;
  RadioChannel ch(sim);
  EXPECT_TRUE(ch.Cca(1, SimTime(0)));
  ch.BeginTransmit(2, DataBytes(2));
  EXPECT_FALSE(ch.Cca(1, SimTime(0)));
  EXPECT_FALSE(ch.Cca(1, SimTime(133)));
  EXPECT_TRUE(ch.Cca(1, SimTime(134)));
}

TEST(Channel, CollisionsInsideCfpAreCountedSeparately) {
  Simulator sim;
  RadioChannel ch(sim);
  ch.SetCfpWindow(SimTime(0), SimTime(1000));
  ch.BeginTransmit(1, DataBytes(1));
  ch.BeginTransmit(2, DataBytes(2));
  sim.RunUntil(SimTime(2000));
  EXPECT_EQ(ch.stats().collided_cfp, 2u);
  EXPECT_EQ(ch.stats().collided_cap, 0u);
}

TEST(ChannelDeathTest, DoubleTransmitAborts) {
  EXPECT_DEATH(
      {
        Simulator sim;
        RadioChannel ch(sim);
        ch.BeginTransmit(1, DataBytes(1));
        ch.BeginTransmit(1, DataBytes(1));
      },
      "");
}

}  // namespace
}  // namespace adamac
