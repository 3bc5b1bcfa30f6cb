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

#include "adamac/frames.h"

#include <set>

namespace adamac {
namespace {

enum FrameType : uint16_t { kTypeBeacon = 0, kTypeData = 1, kTypeAck = 2, kTypeCommand = 3 };

constexpr uint16_t kAckRequest = 1u << 5;
constexpr uint16_t kPanIdCompression = 1u << 6;
constexpr uint16_t kDstShort = 2u << 10;
constexpr uint16_t kSrcShort = 2u << 14;

constexpr uint16_t kFcfBeacon = kTypeBeacon | kSrcShort;
constexpr uint16_t kFcfData = kTypeData | kAckRequest | kPanIdCompression | kDstShort | kSrcShort;
constexpr uint16_t kFcfAck = kTypeAck | kPanIdCompression | kDstShort | kSrcShort;
constexpr uint16_t kFcfCommand = kTypeCommand | kAckRequest | kPanIdCompression | kDstShort | kSrcShort;

constexpr uint8_t kCmdGtsRequest = 0x09;

constexpr std::size_t kBeaconFixedBytes = 7 + 4 + 1 + kFcsBytes;
constexpr std::size_t kAckBytes = 9 + kFcsBytes;
constexpr std::size_t kCommandBytes = 9 + 1 + 3 + kFcsBytes;
constexpr std::size_t kMaxGtsDescriptors = (kMaxPhyPacketBytes - kBeaconFixedBytes) / kGtsDescriptorBytes;

class Writer {
 public:
  void U8(uint8_t v) { out_.push_back(v); }
  void U16(uint16_t v) {
    out_.push_back(static_cast<uint8_t>(v & 0xFF));
    out_.push_back(static_cast<uint8_t>(v >> 8));
  }
  void U64(uint64_t v) {
    for (int i = 0; i < 8; ++i) out_.push_back(static_cast<uint8_t>(v >> (8 * i)));
  }
  void Zeros(std::size_t n) { out_.insert(out_.end(), n, 0); }
  std::vector<uint8_t> Finish() {
    U16(Crc16(out_));
    return std::move(out_);
  }

 private:
  std::vector<uint8_t> out_;
};

class Reader {
 public:
  explicit Reader(std::span<const uint8_t> b) : b_(b) {}
  uint8_t U8(const char* field) {
    Need(1, field);
    return b_[pos_++];
  }
  uint16_t U16(const char* field) {
    Need(2, field);
    uint16_t v = static_cast<uint16_t>(b_[pos_] | (b_[pos_ + 1] << 8));
    pos_ += 2;
    return v;
  }
  uint64_t U64(const char* field) {
    Need(8, field);
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(b_[pos_ + i]) << (8 * i);
    pos_ += 8;
    return v;
  }
  void Skip(std::size_t n, const char* field) {
    Need(n, field);
    pos_ += n;
  }
  std::size_t remaining() const { return b_.size() - pos_; }

 private:
  void Need(std::size_t n, const char* field) {
    if (b_.size() - pos_ < n) throw CodecError(std::string("truncated frame at field ") + field);
  }
  std::span<const uint8_t> b_;
  std::size_t pos_ = 0;
};

void Check(bool ok, const std::string& what) {
  if (!ok) throw CodecError(what);
}

void ValidateData(const DataFrame& f) {
  Check(static_cast<uint8_t>(f.traffic_class) < kNumTrafficClasses, "data.traffic_class: unknown class");
  Check(f.payload_len >= kMinPayloadBytes && f.payload_len <= kMaxPayloadBytes,
        "data.payload_len: must be in [9, 116] bytes");
}

void ValidateRequest(const GtsRequestFrame& f) {
  Check(f.length >= 1 && f.length <= kMaxMiniSlots, "gts_request.length: must be in [1, 64]");
}

std::vector<uint8_t> EncodeBeacon(const BeaconFrame& f) {
  ValidateBeacon(f);
  Writer w;
  w.U16(kFcfBeacon);
  w.U8(f.beacon_seq);
  w.U16(kPanId);
  w.U16(kCoordinatorAddress);
  w.U8(f.spec.beacon_order);
  w.U8(f.spec.superframe_order);
  w.U8(f.spec.cfp_mini_slots);
  w.U8(f.spec.cap_start_mini_slot);
  w.U8(static_cast<uint8_t>(f.gts_list.size()));
  for (const GtsDescriptor& d : f.gts_list) {
    w.U16(d.mac_address);
    w.U8(d.start_slot);
    w.U8(d.length);
    w.U8(0);
  }
  return w.Finish();
}

std::vector<uint8_t> EncodeData(const DataFrame& f) {
  ValidateData(f);
  Writer w;
  w.U16(kFcfData);
  w.U8(f.seq);
  w.U16(kPanId);
  w.U16(f.dst);
  w.U16(f.src);
  w.U8(static_cast<uint8_t>(f.traffic_class));
  w.U64(f.gen_time.symbols());
  w.Zeros(f.payload_len - kMinPayloadBytes);
  return w.Finish();
}

std::vector<uint8_t> EncodeAck(const AckFrame& f) {
  Writer w;
  w.U16(kFcfAck);
  w.U8(f.seq);
  w.U16(kPanId);
  w.U16(f.dst);
  w.U16(f.src);
  return w.Finish();
}

std::vector<uint8_t> EncodeRequest(const GtsRequestFrame& f) {
  ValidateRequest(f);
  Writer w;
  w.U16(kFcfCommand);
  w.U8(f.seq);
  w.U16(kPanId);
  w.U16(kCoordinatorAddress);
  w.U16(f.mac_address);
  w.U8(kCmdGtsRequest);
  w.U8(f.length);
  w.U8(f.burst);
  w.U8(f.periodic);
  return w.Finish();
}

BeaconFrame DecodeBeacon(Reader& r) {
  BeaconFrame f;
  f.beacon_seq = r.U8("beacon_seq");
  Check(r.U16("src_pan") == kPanId, "beacon.src_pan: foreign PAN");
  r.U16("src_addr");
  f.spec.beacon_order = r.U8("beacon_order");
  f.spec.superframe_order = r.U8("superframe_order");
  f.spec.cfp_mini_slots = r.U8("cfp_mini_slots");
  f.spec.cap_start_mini_slot = r.U8("cap_start_mini_slot");
  const uint8_t count = r.U8("gts_count");
  Check(r.remaining() == static_cast<std::size_t>(count) * kGtsDescriptorBytes,
        "beacon.gts_list: length does not match descriptor count");
  f.gts_list.reserve(count);
  for (uint8_t i = 0; i < count; ++i) {
    GtsDescriptor d;
    d.mac_address = r.U16("gts.mac_address");
    d.start_slot = r.U8("gts.start_slot");
    d.length = r.U8("gts.length");
    r.U8("gts.reserved");
    f.gts_list.push_back(d);
  }
  ValidateBeacon(f);
  return f;
}

DataFrame DecodeData(Reader& r, std::size_t mpdu_bytes) {
  DataFrame f;
  f.seq = r.U8("seq");
  Check(r.U16("dst_pan") == kPanId, "data.dst_pan: foreign PAN");
  f.dst = r.U16("dst_addr");
  f.src = r.U16("src_addr");
  f.payload_len = static_cast<uint16_t>(mpdu_bytes - kDataHeaderBytes - kFcsBytes);
  Check(f.payload_len >= kMinPayloadBytes, "data.payload_len: shorter than the class/time prefix");
  f.traffic_class = static_cast<TrafficClass>(r.U8("traffic_class"));
  f.gen_time = SimTime(r.U64("gen_time"));
  r.Skip(f.payload_len - kMinPayloadBytes, "payload");
  ValidateData(f);
  return f;
}

AckFrame DecodeAck(Reader& r) {
  AckFrame f;
  f.seq = r.U8("seq");
  Check(r.U16("dst_pan") == kPanId, "ack.dst_pan: foreign PAN");
  f.dst = r.U16("dst_addr");
  f.src = r.U16("src_addr");
  Check(r.remaining() == 0, "ack: trailing bytes");
  return f;
}

GtsRequestFrame DecodeRequest(Reader& r) {
  GtsRequestFrame f;
  f.seq = r.U8("seq");
  Check(r.U16("dst_pan") == kPanId, "gts_request.dst_pan: foreign PAN");
  Check(r.U16("dst_addr") == kCoordinatorAddress, "gts_request.dst_addr: not the coordinator");
  f.mac_address = r.U16("src_addr");
  Check(r.U8("command_id") == kCmdGtsRequest, "command.command_id: unsupported command");
  f.length = r.U8("gts_request.length");
  f.burst = r.U8("gts_request.burst");
  f.periodic = r.U8("gts_request.periodic");
  Check(r.remaining() == 0, "gts_request: trailing bytes");
  ValidateRequest(f);
  return f;
}

}  // namespace

std::string_view ToString(TrafficClass c) {
  switch (c) {
    case TrafficClass::kBurst:
      return "burst";
    case TrafficClass::kPeriodic:
      return "periodic";
    case TrafficClass::kNormal:
      return "normal";
  }
  return "unknown";
}

bool IsRealTime(TrafficClass c) { return c != TrafficClass::kNormal; }

uint16_t Crc16(std::span<const uint8_t> bytes) {
  uint16_t crc = 0;
  for (uint8_t b : bytes) {
    crc ^= b;
    for (int i = 0; i < 8; ++i) crc = (crc & 1) ? static_cast<uint16_t>((crc >> 1) ^ 0x8408) : static_cast<uint16_t>(crc >> 1);
  }
  return crc;
}

void ValidateBeacon(const BeaconFrame& f) {
  Check(f.spec.beacon_order <= 14, "beacon.beacon_order: must be in [0, 14]");
  Check(f.spec.superframe_order <= 14, "beacon.superframe_order: must be in [0, 14]");
  Check(f.spec.cfp_mini_slots <= kMaxMiniSlots, "beacon.cfp_mini_slots: must be in [0, 64]");
  Check(f.spec.cap_start_mini_slot == f.spec.cfp_mini_slots,
        "beacon.cap_start_mini_slot: must equal cfp_mini_slots");
  Check(f.gts_list.size() <= kMaxGtsDescriptors, "beacon.gts_list: too many descriptors for one frame");
  std::set<ShortAddress> seen;
  int last_end = 0;
  for (const GtsDescriptor& d : f.gts_list) {
    Check(seen.insert(d.mac_address).second, "beacon.gts_list: duplicate mac_address");
    Check(d.length >= 1 && d.length <= kMaxMiniSlots, "gts.length: must be in [1, 64]");
    if (!d.granted()) continue;
    const int end = d.start_slot + d.length - 1;
    Check(end <= f.spec.cfp_mini_slots, "gts.start_slot: descriptor extends past the CFP");
    Check(d.start_slot > last_end, "gts.start_slot: descriptors overlap or are out of order");
    last_end = end;
  }
}

std::vector<uint8_t> Encode(const Frame& frame) {
  return std::visit(
      [](const auto& f) -> std::vector<uint8_t> {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, BeaconFrame>) return EncodeBeacon(f);
        if constexpr (std::is_same_v<T, DataFrame>) return EncodeData(f);
        if constexpr (std::is_same_v<T, AckFrame>) return EncodeAck(f);
        if constexpr (std::is_same_v<T, GtsRequestFrame>) return EncodeRequest(f);
      },
      frame);
}

Frame Decode(std::span<const uint8_t> bytes) {
  Check(bytes.size() >= 3 + kFcsBytes, "frame: too short");
  Check(bytes.size() <= kMaxPhyPacketBytes, "frame: longer than aMaxPHYPacketSize");
  const auto body = bytes.first(bytes.size() - kFcsBytes);
  const uint16_t fcs = static_cast<uint16_t>(bytes[bytes.size() - 2] | (bytes[bytes.size() - 1] << 8));
  Check(Crc16(body) == fcs, "frame: FCS mismatch");
  Reader r(body);
  const uint16_t fcf = r.U16("frame_control");
  switch (fcf) {
    case kFcfBeacon:
      return DecodeBeacon(r);
    case kFcfData:
      return DecodeData(r, bytes.size());
    case kFcfAck:
      return DecodeAck(r);
    case kFcfCommand:
      return DecodeRequest(r);
    default:
      throw CodecError("frame_control: unsupported frame type or addressing");
  }
}

std::size_t EncodedSize(const Frame& frame) {
  return std::visit(
      [](const auto& f) -> std::size_t {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, BeaconFrame>) return kBeaconFixedBytes + f.gts_list.size() * kGtsDescriptorBytes;
        if constexpr (std::is_same_v<T, DataFrame>) return kDataHeaderBytes + f.payload_len + kFcsBytes;
        if constexpr (std::is_same_v<T, AckFrame>) return kAckBytes;
        if constexpr (std::is_same_v<T, GtsRequestFrame>) return kCommandBytes;
      },
      frame);
}

}  // namespace adamac
