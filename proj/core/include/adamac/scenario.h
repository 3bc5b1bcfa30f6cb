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

#ifndef ADAMAC_SCENARIO_H_
#define ADAMAC_SCENARIO_H_

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "adamac/mac_config.h"
#include "adamac/network.h"
#include "adamac/traffic.h"

namespace adamac {

// Experiment parameterization. Defaults are the health-monitoring setup:
// 16 devices, BO = SO = 4, 64 mini-slots, queues of 10 frames, MinBE 3,
// MaxBE 5, MaxNB 4, MaxFrameRetries 3, 50-byte MSDU, 2000 s runs.
struct ScenarioConfig {
  std::string name = "custom";
  Protocol protocol = Protocol::kAdaMac;
  int n_devices = 16;

  double p_burst = 0.002;
  BurstTick burst_tick = BurstTick::kMiniSlot;
  std::vector<double> periodic_intervals_s = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7};
  bool periodic_deterministic = false;
  double normal_interval_s = 0.05;

  double run_time_s = 2000.0;
  std::vector<uint64_t> seeds = {1};

  SuperframeConfig superframe;
  std::size_t queue_capacity = 10;
  CsmaParams csma;
  int msdu_bytes = 50;
  int per_node_slot_cap = 8;
  bool request_when_idle = false;
  bool real_time_cap_fallback = false;
  BaselineDiscipline baseline_discipline = BaselineDiscipline::kStrictPriority;

  double burst_deadline_ms = 250.0;
  double periodic_deadline_ms = 450.0;
};

// Desk-scale run length used by the CLI unless --paper-duration is given.
inline constexpr double kDeskRunTimeS = 200.0;

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Each entry is "<field path>: <constraint>". Empty means valid.
std::vector<std::string> Validate(const ScenarioConfig& config);

// Pretty JSON with every field present.
std::string ToJson(const ScenarioConfig& config);
// Overlays the JSON object onto `base`; absent keys keep their base value.
// Throws ConfigError naming the field on unknown keys or wrong types.
ScenarioConfig ApplyJson(const ScenarioConfig& base, std::string_view json_text);

// One run of the scenario at a given periodic interval and seed.
SimulationConfig ToSimulation(const ScenarioConfig& config, double periodic_interval_s, uint64_t seed);

// Every (interval, seed) point of the scenario, intervals outermost.
std::vector<SimulationConfig> Expand(const ScenarioConfig& config);

// The six protocol / burst-probability combinations compared in the
// health-monitoring study, applied on top of `base`.
std::vector<ScenarioConfig> Table4Scenarios(const ScenarioConfig& base);

// Runs every configuration on up to `threads` workers and returns results in
// input order. `on_done` (optional) is called from the calling thread, in
// input order.
std::vector<RunResult> RunAll(const std::vector<SimulationConfig>& runs, unsigned threads,
                              const std::function<void(std::size_t, const RunResult&)>& on_done = {});

}  // namespace adamac

#endif  // ADAMAC_SCENARIO_H_
