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

#include "cli.h"

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "adamac/gts_allocator.h"
#include "adamac/metrics.h"
#include "adamac/scenario.h"

namespace adamac::cli {
namespace {

uint64_t ParseU64(std::string_view s, std::string_view what) {
  uint64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty()) {
    throw ConfigError(std::string(what) + ": '" + std::string(s) + "' is not a non-negative integer");
  }
  return v;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Flags shared by simulate, sweep and validate. Unset optionals leave the
// file / default value alone.
struct ScenarioFlags {
  std::string config_path;
  bool paper_duration = false;
  std::optional<std::string> name;
  std::optional<std::string> protocol;
  std::optional<double> p_burst;
  std::optional<std::vector<double>> intervals;
  std::optional<std::string> seeds;
  std::optional<double> duration;
  std::optional<int> n_devices;
  std::optional<double> normal_interval;
  std::optional<std::size_t> queue_capacity;
  std::optional<std::string> burst_tick;
  std::optional<std::string> baseline_discipline;
  bool periodic_deterministic = false;
  bool request_when_idle = false;
  bool real_time_cap_fallback = false;

  void Register(CLI::App* app, bool single_point) {
    app->add_option("--config", config_path, "JSON scenario file (flags override it)");
    app->add_flag("--paper-duration", paper_duration, "Default to the full 2000 s run length instead of 200 s");
    app->add_option("--name", name, "Scenario label written to the CSV");
    app->add_option("--protocol", protocol, "adamac | csma_baseline");
    app->add_option("--p-burst", p_burst, "Burst probability per tick");
    if (single_point) {
      app->add_option_function<double>(
          "--periodic-interval", [this](double v) { intervals = std::vector<double>{v}; },
          "Mean periodic inter-arrival (s)");
      app->add_option("--seed", seeds, "Random seed");
    } else {
      app->add_option("--intervals", intervals, "Periodic intervals to sweep (s)")->delimiter(',');
      app->add_option("--seeds", seeds, "Seeds: N, A..B or A,B,C");
    }
    app->add_option("--duration", duration, "Simulated seconds per run");
    app->add_option("--n-devices", n_devices, "Number of end devices");
    app->add_option("--normal-interval", normal_interval, "Mean normal inter-arrival (s), 0 disables");
    app->add_option("--queue-capacity", queue_capacity, "Frames per class queue");
    app->add_option("--burst-tick", burst_tick, "mini_slot | backoff_period");
    app->add_option("--baseline-discipline", baseline_discipline, "strict_priority | single_fifo");
    app->add_flag("--periodic-deterministic", periodic_deterministic, "Fixed-period periodic source");
    app->add_flag("--request-when-idle", request_when_idle, "Send a GTS request even with nothing pending");
    app->add_flag("--real-time-cap-fallback", real_time_cap_fallback,
                  "Let burst/periodic frames contend in the CAP when no GTS is owned");
  }

  ScenarioConfig Build() const {
    ScenarioConfig c;
    if (!paper_duration) c.run_time_s = kDeskRunTimeS;
    if (!config_path.empty()) c = ApplyJson(c, ReadFile(config_path));
    if (name) c.name = *name;
    if (protocol) {
      auto p = ParseProtocol(*protocol);
      if (!p) throw ConfigError("protocol: unknown value '" + *protocol + "'");
      c.protocol = *p;
    }
    if (p_burst) c.p_burst = *p_burst;
    if (intervals) c.periodic_intervals_s = *intervals;
    if (seeds) c.seeds = ParseSeeds(*seeds);
    if (duration) c.run_time_s = *duration;
    if (n_devices) c.n_devices = *n_devices;
    if (normal_interval) c.normal_interval_s = *normal_interval;
    if (queue_capacity) c.queue_capacity = *queue_capacity;
    if (burst_tick) {
      if (*burst_tick == "mini_slot") {
        c.burst_tick = BurstTick::kMiniSlot;
      } else if (*burst_tick == "backoff_period") {
        c.burst_tick = BurstTick::kBackoffPeriod;
      } else {
        throw ConfigError("traffic.burst_tick: unknown value '" + *burst_tick + "'");
      }
    }
    if (baseline_discipline) {
      auto d = ParseBaselineDiscipline(*baseline_discipline);
      if (!d) throw ConfigError("baseline_discipline: unknown value '" + *baseline_discipline + "'");
      c.baseline_discipline = *d;
    }
    if (periodic_deterministic) c.periodic_deterministic = true;
    if (request_when_idle) c.request_when_idle = true;
    if (real_time_cap_fallback) c.real_time_cap_fallback = true;
    return c;
  }
};

void RequireValid(const ScenarioConfig& c) {
  auto violations = Validate(c);
  if (violations.empty()) return;
  std::string msg = "invalid configuration:";
  for (const auto& v : violations) msg += "\n  " + v;
  throw ConfigError(msg);
}

// The single CSV sink of a command. Appends to an existing file and writes
// the header only when the file starts out empty.
class CsvSink {
 public:
  CsvSink(const std::string& out_path, const std::string& default_name, std::string_view header, std::ostream& out)
      : out_(&out) {
    std::string path = out_path;
    if (path.empty()) {
      if (const char* dir = std::getenv(kOutDirEnv); dir != nullptr && *dir != '\0') {
        path = (std::filesystem::path(dir) / (default_name + ".csv")).string();
      }
    }
    bool need_header = true;
    if (!path.empty() && path != "-") {
      std::error_code ec;
      need_header = !std::filesystem::exists(path, ec) || std::filesystem::file_size(path, ec) == 0;
      file_.open(path, std::ios::binary | std::ios::app);
      if (!file_) throw ConfigError("cannot open '" + path + "' for writing");
      out_ = &file_;
      path_ = path;
    }
    if (need_header) *out_ << header << '\n';
  }

  void Write(const std::string& rows) {
    *out_ << rows;
    out_->flush();
  }

  const std::string& path() const { return path_; }

 private:
  std::ofstream file_;
  std::ostream* out_;
  std::string path_;
};

unsigned DefaultThreads() { return std::max(1u, std::thread::hardware_concurrency()); }

int RunSweep(const std::vector<ScenarioConfig>& scenarios, const std::string& out_path, const std::string& default_name,
             unsigned threads, bool quiet, std::ostream& out, std::ostream& err) {
  std::vector<SimulationConfig> runs;
  for (const auto& s : scenarios) {
    RequireValid(s);
    auto expanded = Expand(s);
    runs.insert(runs.end(), expanded.begin(), expanded.end());
  }
  CsvSink sink(out_path, default_name, kCsvHeader, out);
  RunAll(runs, threads, [&](std::size_t i, const RunResult& r) {
    sink.Write(ToCsvRows(r.report));
    if (!quiet) {
      err << "[" << (i + 1) << "/" << runs.size() << "] " << r.report.meta.scenario << " "
          << r.report.meta.protocol << " interval=" << r.report.meta.periodic_interval_s
          << " seed=" << r.report.meta.seed << " events=" << r.stats.events << '\n';
    }
  });
  if (!sink.path().empty() && !quiet) err << "wrote " << sink.path() << '\n';
  return kOk;
}

}  // namespace

std::vector<uint64_t> ParseSeeds(std::string_view text) {
  std::vector<uint64_t> seeds;
  if (auto dots = text.find(".."); dots != std::string_view::npos) {
    uint64_t lo = ParseU64(text.substr(0, dots), "seeds");
    uint64_t hi = ParseU64(text.substr(dots + 2), "seeds");
    if (hi < lo) throw ConfigError("seeds: empty range '" + std::string(text) + "'");
    if (hi - lo >= 100000) throw ConfigError("seeds: range too large");
    for (uint64_t s = lo; s <= hi; ++s) seeds.push_back(s);
    return seeds;
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    seeds.push_back(ParseU64(text.substr(pos, comma - pos), "seeds"));
    pos = comma + 1;
  }
  return seeds;
}

std::vector<GtsRequestFrame> ParseRequestTable(std::string_view text) {
  std::vector<GtsRequestFrame> requests;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    const std::string where = "requests line " + std::to_string(line_no);
    if (tok.size() != 4) throw ConfigError(where + ": expected 'mac_address length burst periodic'");
    uint64_t v[4];
    for (int i = 0; i < 4; ++i) v[i] = ParseU64(tok[static_cast<std::size_t>(i)], where);
    if (v[0] > 0xFFFF) throw ConfigError(where + ": mac_address out of range");
    for (int i = 1; i < 4; ++i) {
      if (v[i] > 255) throw ConfigError(where + ": field " + std::to_string(i + 1) + " exceeds 255");
    }
    GtsRequestFrame r;
    r.mac_address = static_cast<ShortAddress>(v[0]);
    r.length = static_cast<uint8_t>(v[1]);
    r.burst = static_cast<uint8_t>(v[2]);
    r.periodic = static_cast<uint8_t>(v[3]);
    requests.push_back(r);
  }
  return requests;
}

int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ada-MAC / IEEE 802.15.4 beacon-enabled PAN simulator"};
  app.require_subcommand(1);

  ScenarioFlags sim_flags;
  std::string sim_out;
  auto* simulate = app.add_subcommand("simulate", "Run one scenario point per seed and emit CSV rows");
  sim_flags.Register(simulate, true);
  simulate->add_option("--out", sim_out, "CSV file to append to ('-' for stdout)");

  ScenarioFlags sweep_flags;
  std::string sweep_out;
  bool table4 = false;
  bool quiet = false;
  unsigned threads = DefaultThreads();
  auto* sweep = app.add_subcommand("sweep", "Run every interval x seed point of one or more scenarios");
  sweep_flags.Register(sweep, false);
  sweep->add_flag("--table4", table4, "Run the six protocol / burst-probability scenarios");
  sweep->add_option("--out", sweep_out, "CSV file to append to ('-' for stdout)");
  sweep->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  sweep->add_flag("-q,--quiet", quiet, "No progress lines on stderr");

  std::string requests_path;
  int max_slot = SuperframeConfig{}.max_cfp_mini_slots;
  auto* allocate = app.add_subcommand("allocate", "Print the GTS schedule for a request table");
  allocate->add_option("--requests", requests_path, "Request table file")->required();
  allocate->add_option("--max-slot", max_slot, "Last mini-slot the CFP may use");

  std::vector<std::string> summary_inputs;
  std::string summary_out;
  auto* summarize = app.add_subcommand("summarize", "Average per-seed CSV rows across seeds");
  summarize->add_option("inputs", summary_inputs, "CSV files produced by simulate or sweep")->required();
  summarize->add_option("--out", summary_out, "Output file ('-' for stdout)");

  ScenarioFlags validate_flags;
  bool dump = false;
  auto* validate = app.add_subcommand("validate", "Check a configuration and list violations");
  validate_flags.Register(validate, false);
  validate->add_flag("--dump", dump, "Print the effective configuration as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (*simulate) {
      ScenarioConfig c = sim_flags.Build();
      // A single run: the first interval and seed of the effective config.
      if (c.periodic_intervals_s.size() > 1) c.periodic_intervals_s.resize(1);
      if (c.seeds.size() > 1) c.seeds.resize(1);
      return RunSweep({c}, sim_out, c.name, 1, true, out, err);
    }
    if (*sweep) {
      ScenarioConfig base = sweep_flags.Build();
      std::vector<ScenarioConfig> scenarios = table4 ? Table4Scenarios(base) : std::vector<ScenarioConfig>{base};
      return RunSweep(scenarios, sweep_out, table4 ? "table4" : base.name, threads, quiet, out, err);
    }
    if (*allocate) {
      auto requests = ParseRequestTable(ReadFile(requests_path));
      GtsSchedule gl = Allocate(requests, max_slot);
      out << "mac_address start_slot length\n";
      for (const auto& d : gl.entries) {
        out << d.mac_address << ' ' << static_cast<int>(d.start_slot) << ' ' << static_cast<int>(d.length) << '\n';
      }
      out << "cfp_length " << gl.cfp_length << '\n';
      return kOk;
    }
    if (*summarize) {
      std::vector<CsvRow> rows;
      for (const auto& path : summary_inputs) {
        std::vector<CsvRow> part;
        try {
          part = ParseCsv(ReadFile(path));
        } catch (const ConfigError&) {
          throw;
        } catch (const std::runtime_error& e) {
          throw ConfigError(path + ": " + e.what());
        }
        rows.insert(rows.end(), part.begin(), part.end());
      }
      std::string text = SummarizeAcrossSeeds(rows);
      if (summary_out.empty() || summary_out == "-") {
        out << text;
      } else {
        std::ofstream f(summary_out, std::ios::binary);
        if (!f) throw ConfigError("cannot open '" + summary_out + "' for writing");
        f << text;
      }
      return kOk;
    }
    if (*validate) {
      ScenarioConfig c = validate_flags.Build();
      if (dump) out << ToJson(c);
      auto violations = Validate(c);
      if (violations.empty()) {
        out << "ok\n";
        return kOk;
      }
      for (const auto& v : violations) out << v << '\n';
      return kConfigError;
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const AllocationError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return kInternalError;
}

}  // namespace adamac::cli
