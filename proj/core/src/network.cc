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

#include "adamac/network.h"

namespace adamac {

Network::Network(const SimulationConfig& config)
    : config_(config), channel_(sim_), metrics_(config.deadlines) {
  coordinator_ = std::make_unique<CoordinatorMac>(sim_, channel_, config_.mac);
  channel_.Attach(kCoordinatorEntity, coordinator_.get());
  for (int i = 1; i <= config_.n_devices; ++i) {
    auto dev = std::make_unique<DeviceMac>(sim_, channel_, metrics_, config_.mac, static_cast<EntityId>(i),
                                           static_cast<ShortAddress>(i), config_.seed);
    channel_.Attach(static_cast<EntityId>(i), dev.get());
    devices_.push_back(std::move(dev));
  }
}

void Network::Start(bool with_traffic) {
  coordinator_->Start();
  if (!with_traffic) return;
  const SimTime tick =
      config_.traffic.burst_tick == BurstTick::kMiniSlot ? config_.mac.superframe.mini_slot() : kBackoffPeriod;
  for (auto& dev : devices_) {
    DeviceMac* d = dev.get();
    auto src = std::make_unique<TrafficSource>(sim_, static_cast<EntityId>(d->address()), config_.seed,
                                               config_.traffic, tick,
                                               [d](TrafficClass c) { d->OnApplicationFrame(c); });
    src->Start();
    sources_.push_back(std::move(src));
  }
}

RunStats Network::Stats() const {
  RunStats s;
  s.channel = channel_.stats();
  s.coordinator = coordinator_->stats();
  for (const auto& d : devices_) {
    s.devices += d->stats();
    s.data_csma += d->data_csma_stats();
    s.command_csma += d->command_csma_stats();
  }
  s.events = sim_.processed();
  return s;
}

RunResult Network::Finish() {
  metrics_.CloseOpen();
  RunMetadata meta;
  meta.scenario = config_.scenario;
  meta.protocol = std::string(ToString(config_.mac.protocol));
  meta.p_burst = config_.traffic.p_burst;
  meta.periodic_interval_s = config_.traffic.periodic_interval_s;
  meta.seed = config_.seed;
  meta.duration_s = config_.duration.seconds();
  meta.burst_tick = std::string(ToString(config_.traffic.burst_tick));
  return RunResult{metrics_.Summarize(meta), Stats()};
}

RunResult RunSimulation(const SimulationConfig& config) {
  Network net(config);
  net.Start();
  net.RunUntil(config.duration);
  return net.Finish();
}

}  // namespace adamac
