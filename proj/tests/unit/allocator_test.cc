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

#include <algorithm>
#include <random>

#include "adamac/gts_allocator.h"
#include "test_support.h"

namespace adamac {
namespace {

GtsRequestFrame Req(ShortAddress addr, int length, int burst, int periodic) {
  GtsRequestFrame r;
  r.mac_address = addr;
  r.length = static_cast<uint8_t>(length);
  r.burst = static_cast<uint8_t>(burst);
  r.periodic = static_cast<uint8_t>(periodic);
  return r;
}

GtsDescriptor Gd(ShortAddress addr, int start, int length) {
  GtsDescriptor d;
  d.mac_address = addr;
  d.start_slot = static_cast<uint8_t>(start);
  d.length = static_cast<uint8_t>(length);
  return d;
}

TEST(Allocator, EmptyTableGivesEmptySchedule) {
  GtsSchedule s = Allocate(std::vector<GtsRequestFrame>{}, 48);
  EXPECT_TRUE(s.entries.empty());
  EXPECT_EQ(s.cfp_length, 0);
}

TEST(Allocator, MoreBurstFramesGoFirst) {
  constexpr ShortAddress kA = 10, kB = 11;
  std::vector<GtsRequestFrame> r = {Req(kA, 2, 1, 0), Req(kB, 3, 2, 1)};
  GtsSchedule s = Allocate(r, 48);
  ASSERT_EQ(s.entries.size(), 2u);
  EXPECT_EQ(s.entries[0], Gd(kB, 1, 3));
  EXPECT_EQ(s.entries[1], Gd(kA, 4, 2));
  EXPECT_EQ(s.cfp_length, 5);
}

TEST(Allocator, PeriodicThenAddressBreakTies) {
  constexpr ShortAddress kA = 9, kB = 3, kC = 4;
  std::vector<GtsRequestFrame> r = {Req(kC, 2, 1, 1), Req(kB, 2, 1, 1), Req(kA, 2, 1, 2)};
  GtsSchedule s = Allocate(r, 48);
  ASSERT_EQ(s.entries.size(), 3u);
  EXPECT_EQ(s.entries[0], Gd(kA, 1, 2));
  EXPECT_EQ(s.entries[1], Gd(kB, 3, 2));
  EXPECT_EQ(s.entries[2], Gd(kC, 5, 2));
}

TEST(Allocator, LastGrantIsClampedAndRestDenied) {
  // 10 mini-slots requested in total, only 4 available.
  std::vector<GtsRequestFrame> r = {Req(1, 3, 3, 0), Req(2, 3, 2, 0), Req(3, 4, 1, 0)};
  GtsSchedule s = Allocate(r, 4);
  ASSERT_EQ(s.entries.size(), 3u);
  EXPECT_EQ(s.entries[0], Gd(1, 1, 3));
  EXPECT_EQ(s.entries[1], Gd(2, 4, 1));
  EXPECT_EQ(s.entries[2].start_slot, 0);
  EXPECT_FALSE(s.entries[2].granted());
  EXPECT_EQ(s.cfp_length, 4);
}

TEST(Allocator, RejectsBadInput) {
  EXPECT_THROW(Allocate(std::vector<GtsRequestFrame>{Req(1, 1, 0, 1), Req(1, 2, 0, 1)}, 48), AllocationError);
  EXPECT_THROW(Allocate(std::vector<GtsRequestFrame>{Req(1, 0, 0, 1)}, 48), AllocationError);
  EXPECT_THROW(Allocate(std::vector<GtsRequestFrame>{}, 0), AllocationError);
  EXPECT_THROW(Allocate(std::vector<GtsRequestFrame>{}, 65), AllocationError);
}

TEST(RequestTable, LatestRequestFromAnAddressWins) {
  RequestTable t;
  t.Upsert(Req(5, 1, 0, 1));
  t.Upsert(Req(6, 2, 1, 0));
  t.Upsert(Req(5, 3, 2, 1));
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(t.entries()[0], Req(5, 3, 2, 1));
  t.Clear();
  EXPECT_TRUE(t.empty());
}

TEST(Allocator, MatchesSortOracleOnRandomTables) {
  RngStream rng(2024);
  int mismatches = 0;
  for (int i = 0; i < 2000; ++i) {
    auto requests = testing::RandomRequests(rng);
    const int max_slot = static_cast<int>(rng.UniformInt(1, 64));
    if (!(Allocate(requests, max_slot) == testing::OracleAllocate(requests, max_slot))) ++mismatches;
  }
  EXPECT_EQ(mismatches, 0);
}

TEST(Allocator, GrantsTileTheCfpAndRespectBurstPriority) {
  RngStream rng(77);
  for (int i = 0; i < 500; ++i) {
    auto requests = testing::RandomRequests(rng);
    const int max_slot = static_cast<int>(rng.UniformInt(1, 64));
    GtsSchedule s = Allocate(requests, max_slot);
    ASSERT_EQ(s.entries.size(), requests.size());
    int expected_start = 1;
    bool denied_seen = false;
    for (const auto& d : s.entries) {
      if (!d.granted()) {
        denied_seen = true;
        continue;
      }
      ASSERT_FALSE(denied_seen) << "granted entry after a denied one";
      EXPECT_EQ(d.start_slot, expected_start);
      expected_start += d.length;
    }
    EXPECT_EQ(s.cfp_length, expected_start - 1);
    EXPECT_LE(s.cfp_length, max_slot);

    auto burst_of = [&](ShortAddress a) {
      return std::find_if(requests.begin(), requests.end(), [a](const auto& r) { return r.mac_address == a; })->burst;
    };
    for (const auto& x : s.entries) {
      for (const auto& y : s.entries) {
        if (x.granted() && y.granted() && burst_of(x.mac_address) > burst_of(y.mac_address)) {
          EXPECT_LT(x.start_slot, y.start_slot);
        }
      }
    }
  }
}

TEST(Allocator, InputOrderDoesNotMatter) {
  RngStream rng(5);
  std::mt19937_64 shuffler(9);
  for (int i = 0; i < 300; ++i) {
    auto requests = testing::RandomRequests(rng);
    GtsSchedule reference = Allocate(requests, 48);
    std::shuffle(requests.begin(), requests.end(), shuffler);
    EXPECT_EQ(Allocate(requests, 48), reference);
  }
}

}  // namespace
}  // namespace adamac
