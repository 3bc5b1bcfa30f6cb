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

#include "adamac/metrics.h"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace adamac {

std::string_view ToString(LossCause c) {
  switch (c) {
    case LossCause::kQueueOverflow:
      return "queue_overflow";
    case LossCause::kChannelAccessFailure:
      return "channel_access_failure";
    case LossCause::kRetryFailure:
      return "retry_failure";
    case LossCause::kPendingAtEnd:
      return "pending_at_end";
  }
  return "unknown";
}

std::optional<SimTime> Deadlines::For(TrafficClass c) const {
  switch (c) {
    case TrafficClass::kBurst:
      return burst;
    case TrafficClass::kPeriodic:
      return periodic;
    case TrafficClass::kNormal:
      return std::nullopt;
  }
  return std::nullopt;
}

uint64_t ClassReport::lost() const {
  uint64_t n = 0;
  for (uint64_t v : lost_by_cause) n += v;
  return n;
}

uint64_t MetricsCollector::RecordGeneration(TrafficClass c, SimTime gen_time) {
  FrameRecord r;
  r.traffic_class = c;
  r.gen_time = gen_time;
  records_.push_back(r);
  return records_.size() - 1;
}

FrameRecord& MetricsCollector::Open(uint64_t id) {
  if (id >= records_.size()) {
    std::fprintf(stderr, "adamac: outcome for unknown frame %llu\n", static_cast<unsigned long long>(id));
    std::abort();
  }
  FrameRecord& r = records_[id];
  if (r.state != FrameRecord::State::kOpen) {
    std::fprintf(stderr, "adamac: second outcome recorded for frame %llu\n", static_cast<unsigned long long>(id));
    std::abort();
  }
  return r;
}

void MetricsCollector::RecordDelivered(uint64_t id, SimTime at) {
  FrameRecord& r = Open(id);
  r.state = FrameRecord::State::kDelivered;
  r.delivered_at = at;
}

void MetricsCollector::RecordLost(uint64_t id, LossCause cause) {
  FrameRecord& r = Open(id);
  r.state = FrameRecord::State::kLost;
  r.cause = cause;
}

void MetricsCollector::CloseOpen() {
  for (FrameRecord& r : records_) {
    if (r.state == FrameRecord::State::kOpen) {
      r.state = FrameRecord::State::kLost;
      r.cause = LossCause::kPendingAtEnd;
    }
  }
}

MetricsReport MetricsCollector::Summarize(const RunMetadata& meta) const {
  MetricsReport report;
  report.meta = meta;
  std::array<double, kNumTrafficClasses> delay_sum{};
  std::array<uint64_t, kNumTrafficClasses> delay_max{};
  std::array<uint64_t, kNumTrafficClasses> in_deadline{};
  for (int i = 0; i < kNumTrafficClasses; ++i) report.classes[i].traffic_class = static_cast<TrafficClass>(i);

  for (const FrameRecord& r : records_) {
    const auto i = static_cast<std::size_t>(r.traffic_class);
    ClassReport& c = report.classes[i];
    ++c.generated;
    switch (r.state) {
      case FrameRecord::State::kDelivered: {
        ++c.delivered;
        const uint64_t delay = (r.delivered_at - r.gen_time).symbols();
        delay_sum[i] += static_cast<double>(delay);
        delay_max[i] = std::max(delay_max[i], delay);
        const auto deadline = deadlines_.For(r.traffic_class);
        if (deadline && delay > deadline->symbols()) {
          ++c.deadline_misses;
        } else {
          ++in_deadline[i];
        }
        break;
      }
      case FrameRecord::State::kLost:
        ++c.lost_by_cause[static_cast<std::size_t>(r.cause)];
        break;
      case FrameRecord::State::kOpen:
        ++c.lost_by_cause[static_cast<std::size_t>(LossCause::kPendingAtEnd)];
        break;
    }
  }

  for (std::size_t i = 0; i < report.classes.size(); ++i) {
    ClassReport& c = report.classes[i];
    if (c.delivered > 0) {
      c.mean_delay_ms = delay_sum[i] * kSecondsPerSymbol * 1e3 / static_cast<double>(c.delivered);
      c.max_delay_ms = SimTime(delay_max[i]).millis();
    }
    if (c.generated > 0) {
      const double g = static_cast<double>(c.generated);
      c.loss_rate = static_cast<double>(c.generated - c.delivered) / g;
      c.delivery_ratio = static_cast<double>(in_deadline[i]) / g;
    }
  }
  return report;
}

namespace {

std::string Fmt(const char* fmt, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), fmt, v);
  return buf;
}

std::string Opt(const std::optional<double>& v) { return v ? Fmt("%.6f", *v) : std::string(); }

std::vector<std::string> SplitCsvLine(std::string_view line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

std::optional<double> ParseOpt(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return std::stod(s);
}

}  // namespace

std::string ToCsvRows(const MetricsReport& report) {
  std::ostringstream os;
  for (const ClassReport& c : report.classes) {
    os << report.meta.scenario << ',' << report.meta.protocol << ',' << Fmt("%g", report.meta.p_burst) << ','
       << Fmt("%g", report.meta.periodic_interval_s) << ',' << report.meta.seed << ',' << ToString(c.traffic_class)
       << ',' << c.generated << ',' << c.delivered << ',' << Opt(c.loss_rate) << ',' << Opt(c.delivery_ratio) << ','
       << Opt(c.mean_delay_ms) << ',' << Opt(c.max_delay_ms) << ',' << c.deadline_misses << '\n';
  }
  return os.str();
}

std::vector<CsvRow> ParseCsv(std::string_view text) {
  std::vector<CsvRow> rows;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (line.empty() || line == "\r") continue;
    if (line.substr(0, 9) == "scenario,") continue;
    const auto f = SplitCsvLine(line);
    if (f.size() != 13) {
      throw std::runtime_error("line " + std::to_string(line_no) + ": expected 13 columns, got " +
                               std::to_string(f.size()));
    }
    try {
      CsvRow r;
      r.scenario = f[0];
      r.protocol = f[1];
      r.p_burst = std::stod(f[2]);
      r.periodic_interval_s = std::stod(f[3]);
      r.seed = std::stoull(f[4]);
      r.traffic_class = f[5];
      r.generated = std::stoull(f[6]);
      r.delivered = std::stoull(f[7]);
      r.loss_rate = ParseOpt(f[8]);
      r.delivery_ratio = ParseOpt(f[9]);
      r.mean_delay_ms = ParseOpt(f[10]);
      r.max_delay_ms = ParseOpt(f[11]);
      r.deadline_misses = std::stoull(f[12]);
      rows.push_back(std::move(r));
    } catch (const std::logic_error&) {
      throw std::runtime_error("line " + std::to_string(line_no) + ": malformed number");
    }
  }
  return rows;
}

std::string SummarizeAcrossSeeds(const std::vector<CsvRow>& rows) {
  struct Acc {
    std::vector<uint64_t> seeds;
    uint64_t generated = 0, delivered = 0, misses = 0;
    double loss = 0, ratio = 0, mean = 0;
    int n_loss = 0, n_ratio = 0, n_mean = 0;
    std::optional<double> max;
  };
  using Key = std::tuple<std::string, std::string, double, double, std::string>;
  std::map<Key, Acc> groups;
  std::vector<Key> order;
  for (const CsvRow& r : rows) {
    Key k{r.scenario, r.protocol, r.p_burst, r.periodic_interval_s, r.traffic_class};
    auto [it, inserted] = groups.try_emplace(k);
    if (inserted) order.push_back(k);
    Acc& a = it->second;
    a.seeds.push_back(r.seed);
    a.generated += r.generated;
    a.delivered += r.delivered;
    a.misses += r.deadline_misses;
    if (r.loss_rate) a.loss += *r.loss_rate, ++a.n_loss;
    if (r.delivery_ratio) a.ratio += *r.delivery_ratio, ++a.n_ratio;
    if (r.mean_delay_ms) a.mean += *r.mean_delay_ms, ++a.n_mean;
    if (r.max_delay_ms) a.max = std::max(a.max.value_or(0.0), *r.max_delay_ms);
  }
  auto avg = [](double sum, int n) -> std::optional<double> {
    if (n == 0) return std::nullopt;
    return sum / n;
  };
  std::ostringstream os;
  os << kSummaryCsvHeader << '\n';
  for (const Key& k : order) {
    const Acc& a = groups.at(k);
    os << std::get<0>(k) << ',' << std::get<1>(k) << ',' << Fmt("%g", std::get<2>(k)) << ','
       << Fmt("%g", std::get<3>(k)) << ',' << a.seeds.size() << ',' << std::get<4>(k) << ',' << a.generated << ','
       << a.delivered << ',' << Opt(avg(a.loss, a.n_loss)) << ',' << Opt(avg(a.ratio, a.n_ratio)) << ','
       << Opt(avg(a.mean, a.n_mean)) << ',' << Opt(a.max) << ',' << a.misses << '\n';
  }
  return os.str();
}

}  // namespace adamac
