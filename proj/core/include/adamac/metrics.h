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

#ifndef ADAMAC_METRICS_H_
#define ADAMAC_METRICS_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "adamac/frames.h"
#include "adamac/sim_time.h"

namespace adamac {

enum class LossCause : uint8_t { kQueueOverflow = 0, kChannelAccessFailure, kRetryFailure, kPendingAtEnd };
inline constexpr int kNumLossCauses = 4;
std::string_view ToString(LossCause c);

struct Deadlines {
  SimTime burst = SimTime::FromMillis(250);
  SimTime periodic = SimTime::FromMillis(450);
  std::optional<SimTime> For(TrafficClass c) const;
};

struct FrameRecord {
  TrafficClass traffic_class = TrafficClass::kNormal;
  SimTime gen_time;
  enum class State : uint8_t { kOpen, kDelivered, kLost } state = State::kOpen;
  SimTime delivered_at;
  LossCause cause = LossCause::kPendingAtEnd;
};

struct ClassReport {
  TrafficClass traffic_class = TrafficClass::kNormal;
  uint64_t generated = 0;
  uint64_t delivered = 0;
  std::array<uint64_t, kNumLossCauses> lost_by_cause{};
  uint64_t deadline_misses = 0;
  // Empty when nothing of this class was delivered / generated.
  std::optional<double> mean_delay_ms;
  std::optional<double> max_delay_ms;
  std::optional<double> loss_rate;
  std::optional<double> delivery_ratio;

  uint64_t lost() const;
};

struct RunMetadata {
  std::string scenario;
  std::string protocol;
  double p_burst = 0.0;
  double periodic_interval_s = 0.0;
  uint64_t seed = 0;
  double duration_s = 0.0;
  std::string burst_tick;
};

struct MetricsReport {
  RunMetadata meta;
  std::array<ClassReport, kNumTrafficClasses> classes;
  const ClassReport& For(TrafficClass c) const { return classes[static_cast<std::size_t>(c)]; }
};

// Per-run frame accounting: every generated frame gets exactly one outcome.
class MetricsCollector {
 public:
  explicit MetricsCollector(Deadlines deadlines = {}) : deadlines_(deadlines) {}

  uint64_t RecordGeneration(TrafficClass c, SimTime gen_time);
  // A second outcome for the same frame aborts the process.
  void RecordDelivered(uint64_t id, SimTime at);
  void RecordLost(uint64_t id, LossCause cause);
  // Marks every frame still open as lost(pending_at_end).
  void CloseOpen();

  MetricsReport Summarize(const RunMetadata& meta) const;

  const FrameRecord& record(uint64_t id) const { return records_.at(id); }
  std::size_t size() const { return records_.size(); }
  const Deadlines& deadlines() const { return deadlines_; }

 private:
  FrameRecord& Open(uint64_t id);

  Deadlines deadlines_;
  std::vector<FrameRecord> records_;
};

// CSV: one row per traffic class per run.
inline constexpr std::string_view kCsvHeader =
    "scenario,protocol,p_burst,periodic_interval_s,seed,class,generated,delivered,loss_rate,delivery_ratio,"
    "mean_delay_ms,max_delay_ms,deadline_misses";
std::string ToCsvRows(const MetricsReport& report);

struct CsvRow {
  std::string scenario;
  std::string protocol;
  double p_burst = 0.0;
  double periodic_interval_s = 0.0;
  uint64_t seed = 0;
  std::string traffic_class;
  uint64_t generated = 0;
  uint64_t delivered = 0;
  std::optional<double> loss_rate;
  std::optional<double> delivery_ratio;
  std::optional<double> mean_delay_ms;
  std::optional<double> max_delay_ms;
  uint64_t deadline_misses = 0;
};

// Throws std::runtime_error naming the line on malformed input.
std::vector<CsvRow> ParseCsv(std::string_view text);

// Aggregates rows across seeds per (scenario, protocol, p_burst, interval,
// class): counts are summed, ratios and mean delays averaged over the seeds
// that report them, max delay is the maximum.
inline constexpr std::string_view kSummaryCsvHeader =
    "scenario,protocol,p_burst,periodic_interval_s,seeds,class,generated,delivered,loss_rate,delivery_ratio,"
    "mean_delay_ms,max_delay_ms,deadline_misses";
std::string SummarizeAcrossSeeds(const std::vector<CsvRow>& rows);

}  // namespace adamac

#endif  // ADAMAC_METRICS_H_
