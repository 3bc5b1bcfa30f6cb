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

#include "adamac/device_mac.h"
#include "adamac/network.h"

namespace adamac {
namespace {

constexpr SimTime kSuperframe{15360};

BeaconFrame BeaconWith(std::vector<GtsDescriptor> gl, int cfp) {
  BeaconFrame b;
  b.spec.cfp_mini_slots = static_cast<uint8_t>(cfp);
  b.spec.cap_start_mini_slot = static_cast<uint8_t>(cfp);
  b.gts_list = std::move(gl);
  return b;
}

TEST(DeviceView, GrantedSlotsMapToTime) {
  MacConfig cfg;
  BeaconFrame b = BeaconWith({GtsDescriptor{5, 2, 3}}, 6);
  const SimTime start(0);
  const SimTime end = start + FrameAirtime(b);
  DeviceScheduleView v = ViewFromBeacon(cfg, b, 3, start, end);
  ASSERT_TRUE(v.my_gts);
  EXPECT_EQ(v.timing.slot_start(5) - v.timing.beacon_end(), SimTime(960));
  EXPECT_EQ(v.timing.slot_end(6) - v.timing.beacon_end(), SimTime(1440));
  EXPECT_EQ(v.cap_window.start, v.timing.slot_start(7));
  EXPECT_EQ(v.cap_window.end, SimTime(15360 - 8 * 240));
  ASSERT_TRUE(v.request_window);
  EXPECT_EQ(v.request_window->end, kSuperframe);
  EXPECT_EQ(v.next_beacon, kSuperframe);
}

TEST(DeviceView, DeniedEntryMeansCapOnly) {
  MacConfig cfg;
  BeaconFrame b = BeaconWith({GtsDescriptor{1, 2, 9}, GtsDescriptor{0, 4, 3}}, 2);
  DeviceScheduleView v = ViewFromBeacon(cfg, b, 3, SimTime(0), FrameAirtime(b));
  EXPECT_FALSE(v.my_gts);
}

TEST(DeviceView, BaselineCapSpansActivePeriod) {
  MacConfig cfg;
  cfg.protocol = Protocol::kCsmaBaseline;
  BeaconFrame b;
  DeviceScheduleView v = ViewFromBeacon(cfg, b, 3, SimTime(0), FrameAirtime(b));
  EXPECT_EQ(v.cap_window.start, FrameAirtime(b));
  EXPECT_EQ(v.cap_window.end, kSuperframe);
  EXPECT_FALSE(v.request_window);
}

TEST(DeviceRequest, LengthIsPendingCountCapped) {
  EXPECT_EQ(RequestedLength({2, 1}, 8), 3);
  EXPECT_EQ(RequestedLength({9, 9}, 8), 8);
  EXPECT_EQ(RequestedLength({0, 0}, 8), 1);
}

SimulationConfig OneDevice() {
  SimulationConfig c;
  c.n_devices = 1;
  c.duration = SimTime::FromSeconds(5);
  return c;
}

// Injects frames of the given classes at `at` on device 0.
void InjectAt(Network& net, SimTime at, std::vector<TrafficClass> classes) {
  net.sim().Schedule(at, 1, EventKind::kTraffic, [&net, classes] {
    for (TrafficClass c : classes) net.device(0).OnApplicationFrame(c);
  });
}

TEST(DeviceAdaMac, BurstFramesRideTheNextCfp) {
  Network net(OneDevice());
  net.Start(false);
  InjectAt(net, SimTime(1000), {TrafficClass::kBurst, TrafficClass::kBurst});
  net.RunUntil(kSuperframe * 2);
  const auto& rec0 = net.metrics().record(0);
  const auto& rec1 = net.metrics().record(1);
  ASSERT_EQ(rec0.state, FrameRecord::State::kDelivered);
  ASSERT_EQ(rec1.state, FrameRecord::State::kDelivered);
  // Delivered inside the first two mini-slots of the second superframe.
  const SimTime cfp_start = kSuperframe + Airtime(14 + 5);
  EXPECT_GT(rec0.delivered_at, cfp_start);
  EXPECT_LE(rec0.delivered_at, cfp_start + SimTime(240));
  EXPECT_GT(rec1.delivered_at, cfp_start + SimTime(240));
  EXPECT_LE(rec1.delivered_at, cfp_start + SimTime(480));
  EXPECT_EQ(net.coordinator().stats().cfp_frames[0], 2u);
  EXPECT_EQ(net.Stats().channel.collided_cfp, 0u);
}

TEST(DeviceAdaMac, GtsCapacityBoundsDeliveries) {
  SimulationConfig c = OneDevice();
  c.mac.per_node_slot_cap = 2;
  Network net(c);
  net.Start(false);
  InjectAt(net, SimTime(1000), {TrafficClass::kBurst, TrafficClass::kBurst, TrafficClass::kBurst});
  net.RunUntil(kSuperframe + SimTime(2000));
  EXPECT_EQ(net.coordinator().stats().cfp_frames[0], 2u);
  EXPECT_EQ(net.device(0).queues().size(TrafficClass::kBurst), 1u);
}

TEST(DeviceAdaMac, OnePeriodicFrameLeavesSecondSlotIdle) {
  SimulationConfig c = OneDevice();
  Network net(c);
  net.Start(false);
  InjectAt(net, SimTime(1000), {TrafficClass::kPeriodic});
  // A request_when_idle-free device asks for exactly one slot.
  net.RunUntil(kSuperframe + SimTime(2000));
  ASSERT_TRUE(net.coordinator().last_beacon());
  ASSERT_EQ(net.coordinator().last_beacon()->gts_list.size(), 1u);
  EXPECT_EQ(net.coordinator().last_beacon()->gts_list[0].length, 1);
  EXPECT_EQ(net.device(0).stats().gts_slots_used, 1u);
}

TEST(DeviceAdaMac, BurstBeforePeriodicInTheGts) {
  Network net(OneDevice());
  net.Start(false);
  InjectAt(net, SimTime(1000), {TrafficClass::kPeriodic, TrafficClass::kBurst});
  net.RunUntil(kSuperframe * 2);
  const auto& periodic = net.metrics().record(0);
  const auto& burst = net.metrics().record(1);
  ASSERT_EQ(periodic.state, FrameRecord::State::kDelivered);
  ASSERT_EQ(burst.state, FrameRecord::State::kDelivered);
  EXPECT_LT(burst.delivered_at, periodic.delivered_at);
}

TEST(DeviceAdaMac, NoRequestWithNothingPending) {
  Network net(OneDevice());
  net.Start(false);
  InjectAt(net, SimTime(1000), {TrafficClass::kNormal});
  net.RunUntil(kSuperframe * 3);
  EXPECT_EQ(net.device(0).stats().requests_started, 0u);
  EXPECT_EQ(net.coordinator().stats().requests_received, 0u);
  EXPECT_EQ(net.metrics().record(0).state, FrameRecord::State::kDelivered);
  EXPECT_EQ(net.coordinator().stats().cap_frames[2], 1u);
}

TEST(DeviceAdaMac, RequestWhenIdleAsksForOneSlot) {
  SimulationConfig c = OneDevice();
  c.mac.request_when_idle = true;
  Network net(c);
  net.Start(false);
  net.RunUntil(kSuperframe + SimTime(100));
  ASSERT_TRUE(net.coordinator().last_beacon());
  ASSERT_EQ(net.coordinator().last_beacon()->gts_list.size(), 1u);
  EXPECT_EQ(net.coordinator().last_beacon()->gts_list[0].length, 1);
}

TEST(DeviceAdaMac, RealTimeFramesStayOutOfTheCap) {
  Network net(OneDevice());
  net.Start(false);
  InjectAt(net, SimTime(1000), {TrafficClass::kBurst});
  net.RunUntil(kSuperframe);
  // Not delivered before the request round trip completes.
  EXPECT_EQ(net.metrics().record(0).state, FrameRecord::State::kOpen);
  EXPECT_EQ(net.coordinator().stats().cap_frames[0], 0u);
}

TEST(DeviceAdaMac, SilentWithoutABeacon) {
  Network net(OneDevice());
  // No Start(): the coordinator never beacons.
  InjectAt(net, SimTime(10), {TrafficClass::kNormal, TrafficClass::kBurst});
  net.RunUntil(SimTime::FromSeconds(1));
  EXPECT_EQ(net.channel().stats().transmissions, 0u);
}

TEST(DeviceBaseline, SingleDeviceDeliversEverything) {
  SimulationConfig c = OneDevice();
  c.mac.protocol = Protocol::kCsmaBaseline;
  c.traffic.periodic_interval_s = 0.1;
  c.duration = SimTime::FromSeconds(100);
  RunResult r = RunSimulation(c);
  for (const auto& cls : r.report.classes) {
    EXPECT_EQ(cls.lost_by_cause[0] + cls.lost_by_cause[1] + cls.lost_by_cause[2], 0u) << ToString(cls.traffic_class);
  }
  EXPECT_EQ(r.stats.channel.collided_cap + r.stats.channel.collided_cfp, 0u);
  EXPECT_EQ(r.stats.data_csma.violations, 0u);
}

}  // namespace
}  // namespace adamac
