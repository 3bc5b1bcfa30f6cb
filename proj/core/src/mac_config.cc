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

#include "adamac/mac_config.h"

namespace adamac {

std::string_view ToString(Protocol p) {
  switch (p) {
    case Protocol::kAdaMac:
      return "adamac";
    case Protocol::kCsmaBaseline:
      return "csma_baseline";
  }
  return "unknown";
}

std::optional<Protocol> ParseProtocol(std::string_view s) {
  if (s == "adamac") return Protocol::kAdaMac;
  if (s == "csma_baseline" || s == "csma") return Protocol::kCsmaBaseline;
  return std::nullopt;
}

std::string_view ToString(BaselineDiscipline d) {
  switch (d) {
    case BaselineDiscipline::kStrictPriority:
      return "strict_priority";
    case BaselineDiscipline::kSingleFifo:
      return "single_fifo";
  }
  return "unknown";
}

std::optional<BaselineDiscipline> ParseBaselineDiscipline(std::string_view s) {
  if (s == "strict_priority") return BaselineDiscipline::kStrictPriority;
  if (s == "single_fifo") return BaselineDiscipline::kSingleFifo;
  return std::nullopt;
}

}  // namespace adamac
