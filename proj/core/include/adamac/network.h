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

#ifndef ADAMAC_NETWORK_H_
#define ADAMAC_NETWORK_H_

#include <cstdint>
#include <memory>
#include <vector>

#include "adamac/coordinator_mac.h"
#include "adamac/device_mac.h"
#include "adamac/mac_config.h"
#include "adamac/metrics.h"
#include "adamac/radio_channel.h"
#include "adamac/simulator.h"
#include "adamac/traffic.h"

namespace adamac {

// One fully resolved simulation run.
struct SimulationConfig {
  MacConfig mac;
  TrafficProfile traffic;
  Deadlines deadlines;
  int n_devices = 16;
  SimTime duration = SimTime::FromSeconds(200);
  uint64_t seed = 1;
  std::string scenario = "custom";
};

struct RunStats {
  ChannelStats channel;
  CoordinatorStats coordinator;
  DeviceStats devices;
  CsmaStats data_csma;
  CsmaStats command_csma;
  uint64_t events = 0;
};

struct RunResult {
  MetricsReport report;
  RunStats stats;
};

// Star network: coordinator plus `n_devices` devices (short addresses
// 1..n) on one channel, one event loop. Owns every entity of the run.
class Network {
 public:
  explicit Network(const SimulationConfig& config);
  Network(const Network&) = delete;
  Network& operator=(const Network&) = delete;

  // Starts beacons and traffic. Traffic sources can be left off so tests can
  // inject frames by hand.
  void Start(bool with_traffic = true);
  void RunUntil(SimTime t) { sim_.RunUntil(t); }
  // Closes open frames as pending_at_end and builds the report.
  RunResult Finish();

  Simulator& sim() { return sim_; }
  RadioChannel& channel() { return channel_; }
  CoordinatorMac& coordinator() { return *coordinator_; }
  DeviceMac& device(int index) { return *devices_.at(static_cast<std::size_t>(index)); }
  int n_devices() const { return static_cast<int>(devices_.size()); }
  MetricsCollector& metrics() { return metrics_; }
  RunStats Stats() const;

 private:
  SimulationConfig config_;
  Simulator sim_;
  RadioChannel channel_;
  MetricsCollector metrics_;
  std::unique_ptr<CoordinatorMac> coordinator_;
  std::vector<std::unique_ptr<DeviceMac>> devices_;
  std::vector<std::unique_ptr<TrafficSource>> sources_;
};

RunResult RunSimulation(const SimulationConfig& config);

}  // namespace adamac

#endif  // ADAMAC_NETWORK_H_
