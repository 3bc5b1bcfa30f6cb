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

// Wire frames and their byte-exact codec. The layouts are documented in
// FORMATS.md at the repository root; all multi-byte fields are little-endian.

#ifndef ADAMAC_FRAMES_H_
#define ADAMAC_FRAMES_H_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "adamac/sim_time.h"

namespace adamac {

using ShortAddress = uint16_t;
inline constexpr ShortAddress kCoordinatorAddress = 0x0000;
inline constexpr ShortAddress kBroadcastAddress = 0xFFFF;
inline constexpr uint16_t kPanId = 0xADAC;

inline constexpr int kMaxMiniSlots = 64;
inline constexpr std::size_t kMaxPhyPacketBytes = 127;
inline constexpr std::size_t kDataHeaderBytes = 9;
inline constexpr std::size_t kFcsBytes = 2;
inline constexpr std::size_t kGtsDescriptorBytes = 5;
// MSDU prefix written by the application: class tag + generation time.
inline constexpr std::size_t kMinPayloadBytes = 9;
inline constexpr std::size_t kMaxPayloadBytes = kMaxPhyPacketBytes - kDataHeaderBytes - kFcsBytes;

enum class TrafficClass : uint8_t { kBurst = 0, kPeriodic = 1, kNormal = 2 };
inline constexpr int kNumTrafficClasses = 3;

std::string_view ToString(TrafficClass c);
bool IsRealTime(TrafficClass c);

struct SuperframeSpec {
  uint8_t beacon_order = 4;
  uint8_t superframe_order = 4;
  uint8_t cfp_mini_slots = 0;
  // Equal to cfp_mini_slots: the CAP follows the CFP.
  uint8_t cap_start_mini_slot = 0;
  bool operator==(const SuperframeSpec&) const = default;
};

// start_slot is 1-based; 0 means the device got no GTS this superframe.
struct GtsDescriptor {
  uint8_t start_slot = 0;
  uint8_t length = 1;
  ShortAddress mac_address = 0;
  bool granted() const { return start_slot != 0; }
  bool operator==(const GtsDescriptor&) const = default;
};

struct BeaconFrame {
  SuperframeSpec spec;
  std::vector<GtsDescriptor> gts_list;
  uint8_t beacon_seq = 0;
  bool operator==(const BeaconFrame&) const = default;
};

// GTS request command: GR = {length, MacAddress, burst, periodic}.
struct GtsRequestFrame {
  ShortAddress mac_address = 0;
  uint8_t length = 1;
  uint8_t burst = 0;
  uint8_t periodic = 0;
  uint8_t seq = 0;
  bool operator==(const GtsRequestFrame&) const = default;
};

struct DataFrame {
  ShortAddress src = 0;
  ShortAddress dst = kCoordinatorAddress;
  TrafficClass traffic_class = TrafficClass::kNormal;
  uint8_t seq = 0;
  SimTime gen_time;
  uint16_t payload_len = 50;
  bool operator==(const DataFrame&) const = default;
};

// Addressed acknowledgment; dst is the sender of the acknowledged frame.
struct AckFrame {
  uint8_t seq = 0;
  ShortAddress src = kCoordinatorAddress;
  ShortAddress dst = 0;
  bool operator==(const AckFrame&) const = default;
};

using Frame = std::variant<BeaconFrame, DataFrame, AckFrame, GtsRequestFrame>;

class CodecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Throws CodecError naming the offending field when `frame` violates its
// invariants.
std::vector<uint8_t> Encode(const Frame& frame);
// Throws CodecError on truncated, corrupted (FCS) or invariant-violating
// input.
Frame Decode(std::span<const uint8_t> bytes);

// MPDU length that Encode would produce, without encoding.
std::size_t EncodedSize(const Frame& frame);
inline SimTime FrameAirtime(const Frame& frame) { return Airtime(EncodedSize(frame)); }

// CRC-16 used for the FCS (polynomial x^16 + x^12 + x^5 + 1, reflected,
// initial value 0).
uint16_t Crc16(std::span<const uint8_t> bytes);

// Throws CodecError if a beacon's descriptor list is inconsistent.
void ValidateBeacon(const BeaconFrame& beacon);

}  // namespace adamac

#endif  // ADAMAC_FRAMES_H_
