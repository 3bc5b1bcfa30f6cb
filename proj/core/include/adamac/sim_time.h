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

#ifndef ADAMAC_SIM_TIME_H_
#define ADAMAC_SIM_TIME_H_

#include <cmath>
#include <compare>
#include <cstdint>
#include <ostream>

namespace adamac {

// One PHY symbol at the 2.4 GHz O-QPSK PHY (250 kbit/s, 4 bits per symbol).
inline constexpr double kSecondsPerSymbol = 16e-6;
inline constexpr int kSymbolsPerByte = 2;

// Simulation time as an integer count of PHY symbols since start. Every
// protocol duration is an exact number of symbols, so no rounding happens
// inside the MAC.
class SimTime {
 public:
  constexpr SimTime() = default;
  constexpr explicit SimTime(uint64_t symbols) : symbols_(symbols) {}

  static constexpr SimTime Symbols(uint64_t n) { return SimTime(n); }
  // Nearest whole symbol; negative input clamps to zero.
  static SimTime FromSeconds(double seconds) {
    if (!(seconds > 0.0)) return SimTime(0);
    return SimTime(static_cast<uint64_t>(std::llround(seconds / kSecondsPerSymbol)));
  }
  static SimTime FromMillis(double ms) { return FromSeconds(ms * 1e-3); }

  constexpr uint64_t symbols() const { return symbols_; }
  constexpr double seconds() const { return static_cast<double>(symbols_) * kSecondsPerSymbol; }
  constexpr double millis() const { return seconds() * 1e3; }

  constexpr auto operator<=>(const SimTime&) const = default;

  constexpr SimTime& operator+=(SimTime o) {
    symbols_ += o.symbols_;
    return *this;
  }
  friend constexpr SimTime operator+(SimTime a, SimTime b) { return SimTime(a.symbols_ + b.symbols_); }
  // Caller guarantees a >= b.
  friend constexpr SimTime operator-(SimTime a, SimTime b) { return SimTime(a.symbols_ - b.symbols_); }
  friend constexpr SimTime operator*(SimTime a, uint64_t k) { return SimTime(a.symbols_ * k); }
  friend constexpr SimTime operator*(uint64_t k, SimTime a) { return SimTime(a.symbols_ * k); }

  friend std::ostream& operator<<(std::ostream& os, SimTime t) { return os << t.symbols_ << "sym"; }

 private:
  uint64_t symbols_ = 0;
};

// PHY airtime of a MAC frame: 6 bytes of SHR+PHR followed by the MPDU.
constexpr SimTime Airtime(std::size_t mac_frame_bytes) {
  return SimTime((6 + mac_frame_bytes) * kSymbolsPerByte);
}

}  // namespace adamac

#endif  // ADAMAC_SIM_TIME_H_
