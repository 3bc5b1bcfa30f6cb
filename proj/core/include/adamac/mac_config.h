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

#ifndef ADAMAC_MAC_CONFIG_H_
#define ADAMAC_MAC_CONFIG_H_

#include <cstdint>
#include <optional>
#include <string_view>

#include "adamac/csma_ca.h"
#include "adamac/superframe.h"

namespace adamac {

enum class Protocol { kAdaMac, kCsmaBaseline };
std::string_view ToString(Protocol p);
std::optional<Protocol> ParseProtocol(std::string_view s);

// Queueing of the pure CSMA/CA baseline.
enum class BaselineDiscipline { kStrictPriority, kSingleFifo };
std::string_view ToString(BaselineDiscipline d);
std::optional<BaselineDiscipline> ParseBaselineDiscipline(std::string_view s);

struct MacConfig {
  Protocol protocol = Protocol::kAdaMac;
  SuperframeConfig superframe;
  CsmaParams csma;
  std::size_t queue_capacity = 10;
  uint16_t msdu_bytes = 50;

  // Requested GTS length = min(burst + periodic, per_node_slot_cap).
  int per_node_slot_cap = 8;
  // Send a GTS request even with no real-time frame queued.
  bool request_when_idle = false;
  // Let burst/periodic frames contend in the CAP when normal_q is empty.
  bool real_time_cap_fallback = false;

  BaselineDiscipline baseline_discipline = BaselineDiscipline::kStrictPriority;
};

}  // namespace adamac

#endif  // ADAMAC_MAC_CONFIG_H_
