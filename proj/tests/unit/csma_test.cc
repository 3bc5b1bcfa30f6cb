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

#include <optional>
#include <set>
#include <vector>

#include "adamac/csma_ca.h"
#include "adamac/radio_channel.h"
#include "adamac/superframe.h"

namespace adamac {
namespace {

constexpr EntityId kDevice = 1;
constexpr EntityId kPeer = 0;

// Coordinator stand-in that ACKs data frames after the turnaround.
struct Acker : RadioReceiver {
  Simulator& sim;
  RadioChannel& ch;
  bool enabled = true;
  Acker(Simulator& s, RadioChannel& c) : sim(s), ch(c) {}
  void OnFrame(const Frame& f, EntityId, SimTime, SimTime) override {
    const auto* d = std::get_if<DataFrame>(&f);
    if (!d || !enabled) return;
    AckFrame a;
    a.seq = d->seq;
    a.dst = d->src;
    sim.ScheduleIn(kTurnaround, kPeer, EventKind::kTxStart, [this, a] { ch.BeginTransmit(kPeer, Encode(a)); });
  }
};

// Routes ACKs to the engine under test.
struct DeviceEar : RadioReceiver {
  CsmaCa* csma = nullptr;
  void OnFrame(const Frame& f, EntityId, SimTime, SimTime) override {
    if (const auto* a = std::get_if<AckFrame>(&f)) csma->OnAck(a->seq);
  }
};

// Back-to-back maximum-size frames from one entity. Two staggered jammers
// keep the channel busy at every instant.
void Jam(Simulator& sim, RadioChannel& ch, EntityId who, SimTime until) {
  if (sim.Now() >= until) return;
  DataFrame d;
  d.payload_len = kMaxPayloadBytes;
  d.dst = 0x7777;
  const SimTime end = ch.BeginTransmit(who, Encode(d));
  sim.Schedule(end, who, EventKind::kGeneric, [&sim, &ch, who, until] { Jam(sim, ch, who, until); });
}

struct Bench {
  Simulator sim;
  RadioChannel ch{sim};
  Acker acker{sim, ch};
  DeviceEar ear;
  CsmaCa csma;
  std::optional<CsmaOutcome> outcome;
  std::vector<SimTime> tx_starts;

  explicit Bench(uint64_t seed, CsmaParams params = {})
      : csma(sim, ch, kDevice, params, RngStream(seed)) {
    ch.Attach(kPeer, &acker);
    ch.Attach(kDevice, &ear);
    ear.csma = &csma;
  }

  void Send(uint8_t seq = 1) {
    DataFrame d;
    d.src = 1;
    d.seq = seq;
    auto bytes = Encode(d);
    const std::size_t size = bytes.size();
    csma.Start(
        size,
        [this, bytes, seq] {
          tx_starts.push_back(sim.Now());
          return CsmaCa::Built{bytes, seq};
        },
        [this](CsmaOutcome o) { outcome = o; });
  }
};

TEST(Csma, IdleChannelFirstBackoffWithinBe3) {
  std::set<uint64_t> periods;
  for (uint64_t seed = 1; seed <= 400; ++seed) {
    Bench b(seed);
    b.csma.SetWindow(ContentionWindow{SimTime(0), SimTime(100000), SimTime(0)});
    b.Send();
    b.sim.RunUntil(SimTime(5000));
    ASSERT_EQ(b.outcome, CsmaOutcome::kDelivered);
    ASSERT_EQ(b.tx_starts.size(), 1u);
    const uint64_t t = b.tx_starts[0].symbols();
    ASSERT_EQ(t % 20, 0u);
    // Backoff periods, then two CCA periods.
    periods.insert(t / 20 - 2);
  }
  EXPECT_EQ(*periods.begin(), 0u);
  EXPECT_EQ(*periods.rbegin(), 7u);
  EXPECT_EQ(periods.size(), 8u);
}

TEST(Csma, FiveBusyCcasGiveChannelAccessFailure) {
  Bench b(3);
  b.csma.SetWindow(ContentionWindow{SimTime(0), SimTime(1000000), SimTime(0)});
  Jam(b.sim, b.ch, 7, SimTime(1000000));
  b.sim.Schedule(SimTime(133), 8, EventKind::kGeneric, [&b] { Jam(b.sim, b.ch, 8, SimTime(1000000)); });
  b.Send();
  b.sim.RunUntil(SimTime(100000));
  EXPECT_EQ(b.outcome, CsmaOutcome::kChannelAccessFailure);
  EXPECT_EQ(b.csma.stats().busy_ccas, 5u);
  EXPECT_EQ(b.csma.stats().max_nb_seen, 4);
  EXPECT_EQ(b.csma.stats().max_be_seen, 5);
  EXPECT_TRUE(b.tx_starts.empty());
  EXPECT_EQ(b.csma.stats().violations, 0u);
}

TEST(Csma, FourUnackedTransmissionsGiveRetryFailure) {
  Bench b(4);
  b.acker.enabled = false;
  b.csma.SetWindow(ContentionWindow{SimTime(0), SimTime(1000000), SimTime(0)});
  b.Send();
  b.sim.RunUntil(SimTime(100000));
  EXPECT_EQ(b.outcome, CsmaOutcome::kRetryFailure);
  EXPECT_EQ(b.tx_starts.size(), 4u);
  EXPECT_EQ(b.csma.stats().max_retries_seen, 3);
}

TEST(Csma, StaleAckIsIgnored) {
  Bench b(5);
  b.acker.enabled = false;
  b.csma.SetWindow(ContentionWindow{SimTime(0), SimTime(1000000), SimTime(0)});
  b.Send(9);
  for (uint64_t t = 1; b.tx_starts.empty() && t < 1000; ++t) b.sim.RunUntil(SimTime(t));
  ASSERT_EQ(b.tx_starts.size(), 1u);
  // Inside the ACK wait of the first transmission.
  b.sim.RunUntil(b.tx_starts[0] + Airtime(EncodedSize(DataFrame{})) + SimTime(10));
  b.csma.OnAck(8);
  EXPECT_TRUE(b.csma.busy());
  b.csma.OnAck(9);
  EXPECT_EQ(b.outcome, CsmaOutcome::kDelivered);
}

TEST(Csma, TransactionThatDoesNotFitWaitsForNextWindow) {
  Bench b(6);
  // 40 + 134 + 12 + 34 = 220 symbols needed; only 200 available.
  b.csma.SetWindow(ContentionWindow{SimTime(0), SimTime(200), SimTime(0)});
  b.Send();
  b.sim.RunUntil(SimTime(1000));
  EXPECT_TRUE(b.tx_starts.empty());
  EXPECT_TRUE(b.csma.busy());
  EXPECT_GE(b.csma.stats().deferrals, 1u);
  b.sim.RunUntil(SimTime(15360));
  b.csma.SetWindow(ContentionWindow{SimTime(15360), SimTime(30720), SimTime(15360)});
  b.sim.RunUntil(SimTime(30720));
  ASSERT_EQ(b.tx_starts.size(), 1u);
  EXPECT_GE(b.tx_starts[0], SimTime(15360));
  EXPECT_EQ(b.outcome, CsmaOutcome::kDelivered);
}

TEST(Csma, BackoffCountdownPausesOutsideTheWindow) {
  // Window of 3 periods; any draw above 3 must resume in the next window.
  for (uint64_t seed = 1; seed <= 50; ++seed) {
    Bench b(seed);
    b.csma.SetWindow(ContentionWindow{SimTime(0), SimTime(60), SimTime(0)});
    b.Send();
    b.sim.RunUntil(SimTime(1000));
    EXPECT_TRUE(b.tx_starts.empty());
    b.csma.SetWindow(ContentionWindow{SimTime(1000), SimTime(5000), SimTime(1000)});
    b.sim.RunUntil(SimTime(5000));
    ASSERT_EQ(b.tx_starts.size(), 1u);
    EXPECT_EQ((b.tx_starts[0] - SimTime(1000)).symbols() % 20, 0u);
    EXPECT_EQ(b.csma.stats().violations, 0u);
  }
}

TEST(Csma, TwoStationsPassingCcaTogetherCollide) {
  // Same seed, same start: both draw the same backoff and transmit together.
  Simulator sim;
  RadioChannel ch(sim);
  CsmaCa a(sim, ch, 1, CsmaParams{}, RngStream(99));
  CsmaCa b(sim, ch, 2, CsmaParams{}, RngStream(99));
  const ContentionWindow w{SimTime(0), SimTime(100000), SimTime(0)};
  a.SetWindow(w);
  b.SetWindow(w);
  DataFrame d;
  auto bytes = Encode(d);
  a.Start(bytes.size(), [bytes] { return CsmaCa::Built{bytes, 0}; }, [](CsmaOutcome) {});
  b.Start(bytes.size(), [bytes] { return CsmaCa::Built{bytes, 0}; }, [](CsmaOutcome) {});
  sim.RunUntil(SimTime(400));
  EXPECT_EQ(ch.stats().collided_cap, 2u);
}

}  // namespace
}  // namespace adamac
