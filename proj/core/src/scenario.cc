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

#include "adamac/scenario.h"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <mutex>
#include <optional>
#include <thread>

#include "adamac/frames.h"
#include "json.hpp"

namespace adamac {
namespace {

using nlohmann::json;

// Largest beacon the coordinator can emit for this many devices.
SimTime WorstBeaconAirtime(int n_devices) {
  BeaconFrame b;
  b.gts_list.resize(static_cast<std::size_t>(std::max(n_devices, 0)));
  return FrameAirtime(b);
}

constexpr int kMaxDevices = 22;  // GTS descriptors that fit in one beacon

}  // namespace

std::vector<std::string> Validate(const ScenarioConfig& c) {
  std::vector<std::string> v;
  auto require = [&v](bool ok, const std::string& what) {
    if (!ok) v.push_back(what);
  };
  const SuperframeConfig& sf = c.superframe;

  require(!c.name.empty() && c.name.find(',') == std::string::npos, "name: must be non-empty and contain no commas");
  require(c.n_devices >= 1 && c.n_devices <= kMaxDevices, "n_devices: must be in [1, 22]");
  require(c.p_burst >= 0.0 && c.p_burst <= 1.0, "p_burst: must be in [0, 1]");
  require(!c.periodic_intervals_s.empty(), "periodic_intervals_s: must list at least one interval");
  for (std::size_t i = 0; i < c.periodic_intervals_s.size(); ++i) {
    require(c.periodic_intervals_s[i] > 0.0,
            "periodic_intervals_s[" + std::to_string(i) + "]: must be > 0");
  }
  require(c.normal_interval_s >= 0.0, "normal_interval_s: must be >= 0 (0 disables normal traffic)");
  require(c.run_time_s > 0.0, "run_time_s: must be > 0");
  require(!c.seeds.empty(), "seeds: must list at least one seed");

  require(sf.superframe_order >= 0 && sf.superframe_order <= 14, "superframe.superframe_order: must be in [0, 14]");
  require(sf.beacon_order >= 0 && sf.beacon_order <= 14, "superframe.beacon_order: must be in [0, 14]");
  require(sf.beacon_order >= sf.superframe_order, "superframe.beacon_order: must be >= superframe_order");
  const bool slots_ok = sf.mini_slots >= 1 && sf.mini_slots <= kMaxMiniSlots;
  require(slots_ok, "superframe.mini_slots: must be in [1, 64]");
  if (slots_ok && sf.superframe_order >= 0 && sf.superframe_order <= 14) {
    require(sf.superframe_duration().symbols() % static_cast<uint64_t>(sf.mini_slots) == 0,
            "superframe.mini_slots: must divide the superframe duration");
  }
  require(sf.max_cfp_mini_slots >= 1 && sf.max_cfp_mini_slots <= sf.mini_slots,
          "superframe.max_cfp_mini_slots: must be in [1, mini_slots]");
  require(sf.request_window_mini_slots >= 1, "superframe.request_window_mini_slots: must be >= 1");
  require(c.queue_capacity >= 1, "queue_capacity: must be >= 1");
  require(c.msdu_bytes >= static_cast<int>(kMinPayloadBytes) && c.msdu_bytes <= static_cast<int>(kMaxPayloadBytes),
          "msdu_bytes: must be in [9, 116]");
  require(c.per_node_slot_cap >= 1 && c.per_node_slot_cap <= kMaxMiniSlots, "per_node_slot_cap: must be in [1, 64]");

  require(c.csma.min_be >= 0 && c.csma.min_be <= c.csma.max_be, "csma.min_be: must be in [0, max_be]");
  require(c.csma.max_be >= 3 && c.csma.max_be <= 8, "csma.max_be: must be in [3, 8]");
  require(c.csma.max_nb >= 0 && c.csma.max_nb <= 5, "csma.max_nb: must be in [0, 5]");
  require(c.csma.max_frame_retries >= 0 && c.csma.max_frame_retries <= 7, "csma.max_frame_retries: must be in [0, 7]");

  require(c.burst_deadline_ms > 0.0, "deadlines.burst_ms: must be > 0");
  require(c.periodic_deadline_ms > 0.0, "deadlines.periodic_ms: must be > 0");

  if (v.empty() && c.protocol == Protocol::kAdaMac) {
    const int usable = sf.usable_mini_slots(WorstBeaconAirtime(c.n_devices));
    require(sf.max_cfp_mini_slots + sf.request_window_mini_slots <= usable,
            "superframe.max_cfp_mini_slots: CFP plus request window exceed the " + std::to_string(usable) +
                " usable mini-slots");
    const SimTime exchange = Airtime(kDataHeaderBytes + static_cast<std::size_t>(c.msdu_bytes) + kFcsBytes) +
                             kTurnaround + c.csma.ack_airtime;
    require(exchange <= sf.mini_slot(), "superframe.mini_slots: a data frame and its ACK must fit in one mini-slot");
  }
  return v;
}

namespace {

json CsmaJson(const CsmaParams& p) {
  return json{{"min_be", p.min_be}, {"max_be", p.max_be}, {"max_nb", p.max_nb}, {"max_frame_retries", p.max_frame_retries}};
}

// Typed accessor that reports the full field path on error.
class Overlay {
 public:
  Overlay(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) throw ConfigError(Where("") + ": expected an object");
  }

  void Only(std::initializer_list<std::string_view> keys) const {
    for (const auto& [k, _] : j_.items()) {
      if (std::find(keys.begin(), keys.end(), k) == keys.end()) throw ConfigError(Where(k) + ": unknown field");
    }
  }

  template <typename T>
  void Get(std::string_view key, T& out) const {
    auto it = j_.find(std::string(key));
    if (it == j_.end()) return;
    try {
      out = it->template get<T>();
    } catch (const json::exception&) {
      throw ConfigError(Where(key) + ": wrong type");
    }
  }

  template <typename Parse, typename T>
  void GetEnum(std::string_view key, Parse parse, T& out) const {
    std::string s;
    std::optional<std::string> present;
    Get(key, s);
    if (j_.find(std::string(key)) == j_.end()) return;
    auto v = parse(s);
    if (!v) throw ConfigError(Where(key) + ": unknown value '" + s + "'");
    out = *v;
  }

  std::optional<Overlay> Child(std::string_view key) const {
    auto it = j_.find(std::string(key));
    if (it == j_.end()) return std::nullopt;
    return Overlay(*it, Where(key));
  }

 private:
  std::string Where(std::string_view key) const {
    if (key.empty()) return path_.empty() ? "<root>" : path_;
    return path_.empty() ? std::string(key) : path_ + "." + std::string(key);
  }
  const json& j_;
  std::string path_;
};

std::optional<BurstTick> ParseBurstTick(std::string_view s) {
  if (s == "mini_slot") return BurstTick::kMiniSlot;
  if (s == "backoff_period") return BurstTick::kBackoffPeriod;
  return std::nullopt;
}

}  // namespace

std::string ToJson(const ScenarioConfig& c) {
  json j;
  j["name"] = c.name;
  j["protocol"] = std::string(ToString(c.protocol));
  j["n_devices"] = c.n_devices;
  j["traffic"] = {
      {"p_burst", c.p_burst},
      {"burst_tick", std::string(ToString(c.burst_tick))},
      {"periodic_intervals_s", c.periodic_intervals_s},
      {"periodic_deterministic", c.periodic_deterministic},
      {"normal_interval_s", c.normal_interval_s},
  };
  j["run_time_s"] = c.run_time_s;
  j["seeds"] = c.seeds;
  j["superframe"] = {
      {"beacon_order", c.superframe.beacon_order},
      {"superframe_order", c.superframe.superframe_order},
      {"mini_slots", c.superframe.mini_slots},
      {"max_cfp_mini_slots", c.superframe.max_cfp_mini_slots},
      {"request_window_mini_slots", c.superframe.request_window_mini_slots},
  };
  j["queue_capacity"] = c.queue_capacity;
  j["csma"] = CsmaJson(c.csma);
  j["msdu_bytes"] = c.msdu_bytes;
  j["allocator"] = {
      {"per_node_slot_cap", c.per_node_slot_cap},
      {"request_when_idle", c.request_when_idle},
  };
  j["real_time_cap_fallback"] = c.real_time_cap_fallback;
  j["baseline_discipline"] = std::string(ToString(c.baseline_discipline));
  j["deadlines"] = {{"burst_ms", c.burst_deadline_ms}, {"periodic_ms", c.periodic_deadline_ms}};
  return j.dump(2) + "\n";
}

ScenarioConfig ApplyJson(const ScenarioConfig& base, std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: invalid JSON: ") + e.what());
  }
  ScenarioConfig c = base;
  Overlay root(j, "");
  root.Only({"name", "protocol", "n_devices", "traffic", "run_time_s", "seeds", "superframe", "queue_capacity", "csma",
             "msdu_bytes", "allocator", "real_time_cap_fallback", "baseline_discipline", "deadlines"});
  root.Get("name", c.name);
  root.GetEnum("protocol", ParseProtocol, c.protocol);
  root.Get("n_devices", c.n_devices);
  root.Get("run_time_s", c.run_time_s);
  root.Get("seeds", c.seeds);
  root.Get("queue_capacity", c.queue_capacity);
  root.Get("msdu_bytes", c.msdu_bytes);
  root.Get("real_time_cap_fallback", c.real_time_cap_fallback);
  root.GetEnum("baseline_discipline", ParseBaselineDiscipline, c.baseline_discipline);
  if (auto t = root.Child("traffic")) {
    t->Only({"p_burst", "burst_tick", "periodic_intervals_s", "periodic_deterministic", "normal_interval_s"});
    t->Get("p_burst", c.p_burst);
    t->GetEnum("burst_tick", ParseBurstTick, c.burst_tick);
    t->Get("periodic_intervals_s", c.periodic_intervals_s);
    t->Get("periodic_deterministic", c.periodic_deterministic);
    t->Get("normal_interval_s", c.normal_interval_s);
  }
  if (auto s = root.Child("superframe")) {
    s->Only({"beacon_order", "superframe_order", "mini_slots", "max_cfp_mini_slots", "request_window_mini_slots"});
    s->Get("beacon_order", c.superframe.beacon_order);
    s->Get("superframe_order", c.superframe.superframe_order);
    s->Get("mini_slots", c.superframe.mini_slots);
    s->Get("max_cfp_mini_slots", c.superframe.max_cfp_mini_slots);
    s->Get("request_window_mini_slots", c.superframe.request_window_mini_slots);
  }
  if (auto s = root.Child("csma")) {
    s->Only({"min_be", "max_be", "max_nb", "max_frame_retries"});
    s->Get("min_be", c.csma.min_be);
    s->Get("max_be", c.csma.max_be);
    s->Get("max_nb", c.csma.max_nb);
    s->Get("max_frame_retries", c.csma.max_frame_retries);
  }
  if (auto a = root.Child("allocator")) {
    a->Only({"per_node_slot_cap", "request_when_idle"});
    a->Get("per_node_slot_cap", c.per_node_slot_cap);
    a->Get("request_when_idle", c.request_when_idle);
  }
  if (auto d = root.Child("deadlines")) {
    d->Only({"burst_ms", "periodic_ms"});
    d->Get("burst_ms", c.burst_deadline_ms);
    d->Get("periodic_ms", c.periodic_deadline_ms);
  }
  return c;
}

SimulationConfig ToSimulation(const ScenarioConfig& c, double periodic_interval_s, uint64_t seed) {
  SimulationConfig s;
  s.scenario = c.name;
  s.n_devices = c.n_devices;
  s.duration = SimTime::FromSeconds(c.run_time_s);
  s.seed = seed;
  s.mac.protocol = c.protocol;
  s.mac.superframe = c.superframe;
  s.mac.csma = c.csma;
  s.mac.queue_capacity = c.queue_capacity;
  s.mac.msdu_bytes = static_cast<uint16_t>(c.msdu_bytes);
  s.mac.per_node_slot_cap = c.per_node_slot_cap;
  s.mac.request_when_idle = c.request_when_idle;
  s.mac.real_time_cap_fallback = c.real_time_cap_fallback;
  s.mac.baseline_discipline = c.baseline_discipline;
  s.traffic.p_burst = c.p_burst;
  s.traffic.burst_tick = c.burst_tick;
  s.traffic.periodic_interval_s = periodic_interval_s;
  s.traffic.periodic_deterministic = c.periodic_deterministic;
  s.traffic.normal_interval_s = c.normal_interval_s;
  s.traffic.normal_enabled = c.normal_interval_s > 0.0;
  s.deadlines.burst = SimTime::FromMillis(c.burst_deadline_ms);
  s.deadlines.periodic = SimTime::FromMillis(c.periodic_deadline_ms);
  return s;
}

std::vector<SimulationConfig> Expand(const ScenarioConfig& c) {
  std::vector<SimulationConfig> out;
  for (double interval : c.periodic_intervals_s) {
    for (uint64_t seed : c.seeds) out.push_back(ToSimulation(c, interval, seed));
  }
  return out;
}

std::vector<ScenarioConfig> Table4Scenarios(const ScenarioConfig& base) {
  struct Row {
    const char* name;
    Protocol protocol;
    double p_burst;
  };
  static constexpr Row kRows[] = {
      {"scenario1", Protocol::kAdaMac, 0.002},       {"scenario2", Protocol::kAdaMac, 0.001},
      {"scenario3", Protocol::kAdaMac, 0.0005},      {"scenario4", Protocol::kCsmaBaseline, 0.002},
      {"scenario5", Protocol::kCsmaBaseline, 0.001}, {"scenario6", Protocol::kCsmaBaseline, 0.0005},
  };
  std::vector<ScenarioConfig> out;
  for (const Row& r : kRows) {
    ScenarioConfig c = base;
    c.name = r.name;
    c.protocol = r.protocol;
    c.p_burst = r.p_burst;
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<RunResult> RunAll(const std::vector<SimulationConfig>& runs, unsigned threads,
                              const std::function<void(std::size_t, const RunResult&)>& on_done) {
  std::vector<std::optional<RunResult>> results(runs.size());
  std::mutex mu;
  std::condition_variable cv;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < runs.size(); i = next++) {
      RunResult r = RunSimulation(runs[i]);
      {
        std::lock_guard<std::mutex> lock(mu);
        results[i] = std::move(r);
      }
      cv.notify_all();
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(runs.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (std::size_t i = 0; i < runs.size(); ++i) {
    std::unique_lock<std::mutex> lock(mu);
    cv.wait(lock, [&] { return results[i].has_value(); });
    if (on_done) {
      const RunResult& r = *results[i];
      lock.unlock();
      on_done(i, r);
    }
  }
  for (std::thread& t : pool) t.join();
  std::vector<RunResult> out;
  out.reserve(results.size());
  for (auto& r : results) out.push_back(std::move(*r));
  return out;
}

}  // namespace adamac
