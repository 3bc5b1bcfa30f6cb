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

#ifndef ADAMAC_CSMA_CA_H_
#define ADAMAC_CSMA_CA_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "adamac/radio_channel.h"
#include "adamac/rng.h"
#include "adamac/simulator.h"
#include "adamac/superframe.h"

namespace adamac {

struct CsmaParams {
  int min_be = 3;
  int max_be = 5;
  int max_nb = 4;
  int max_frame_retries = 3;
  // Turnaround + ACK airtime + one backoff period of slack.
  SimTime ack_wait{66};
  SimTime ack_airtime{34};
};

enum class CsmaOutcome { kDelivered, kChannelAccessFailure, kRetryFailure };

// Contention window for one superframe. Backoff period boundaries are
// `origin + k * 20` symbols; `origin` is the beacon start.
struct ContentionWindow {
  SimTime start;
  SimTime end;
  SimTime origin;
};

// Running conformance record. Every check that fails bumps `violations`.
struct CsmaStats {
  uint64_t attempts = 0;
  uint64_t backoff_draws = 0;
  uint64_t ccas = 0;
  uint64_t busy_ccas = 0;
  uint64_t transmissions = 0;
  uint64_t delivered = 0;
  uint64_t channel_access_failures = 0;
  uint64_t retry_failures = 0;
  uint64_t deferrals = 0;
  // Largest BE and NB a backoff started with, and most retransmissions made.
  int max_be_seen = 0;
  int max_nb_seen = 0;
  int max_retries_seen = 0;
  uint64_t violations = 0;

  CsmaStats& operator+=(const CsmaStats& o);
};

// Slotted CSMA/CA transmitter for one frame at a time.
//
//   NB = 0, CW = 2, BE = MinBE
//   backoff random(0 .. 2^BE - 1) periods, counted only inside the window
//   CCA on consecutive period boundaries until CW reaches 0, then transmit
//   busy CCA: NB++, BE = min(BE + 1, MaxBE), CW = 2; NB > MaxNB fails
//   no ACK within ack_wait: retries++, restart; retries > MaxFrameRetries fails
//
// When the backoff runs past the window end the countdown pauses and resumes
// in the next window. When the two CCAs, the frame and its ACK do not fit in
// the remaining window, the attempt waits for the next window and draws a
// fresh backoff there.
class CsmaCa {
 public:
  struct Built {
    std::vector<uint8_t> bytes;
    uint8_t seq = 0;
  };
  // Produces the frame when the channel has been found clear.
  using BuildFn = std::function<Built()>;
  using DoneFn = std::function<void(CsmaOutcome)>;

  CsmaCa(Simulator& sim, RadioChannel& channel, EntityId self, CsmaParams params, RngStream rng);
  CsmaCa(const CsmaCa&) = delete;
  CsmaCa& operator=(const CsmaCa&) = delete;

  // Installs this superframe's window (nullopt: no window until further
  // notice). A parked attempt resumes inside the new window.
  void SetWindow(std::optional<ContentionWindow> window);

  // `frame_bytes` is the MPDU size, used for the fits-in-window check.
  void Start(std::size_t frame_bytes, BuildFn build, DoneFn done);
  // ACK addressed to this device.
  void OnAck(uint8_t seq);

  bool busy() const { return state_ != State::kIdle; }
  const CsmaStats& stats() const { return stats_; }
  const CsmaParams& params() const { return params_; }

 private:
  enum class State { kIdle, kParkedBackoff, kParkedRedraw, kBackoff, kCca, kAwaitAck };

  void BeginBackoff(SimTime from);
  void ContinueBackoff(SimTime from);
  void OnCountdownDone(SimTime boundary);
  void DoCca(SimTime boundary);
  void Transmit();
  void OnAckTimeout();
  void Finish(CsmaOutcome outcome);
  SimTime NextBoundary(SimTime t) const;
  void Check(bool ok) {
    if (!ok) ++stats_.violations;
  }

  Simulator& sim_;
  RadioChannel& channel_;
  EntityId self_;
  CsmaParams params_;
  RngStream rng_;
  std::optional<ContentionWindow> window_;

  State state_ = State::kIdle;
  int nb_ = 0;
  int be_ = 0;
  int cw_ = 0;
  int retries_ = 0;
  uint64_t remaining_periods_ = 0;
  std::size_t frame_bytes_ = 0;
  BuildFn build_;
  DoneFn done_;
  std::optional<uint8_t> awaited_seq_;
  EventHandle pending_;
  CsmaStats stats_;
};

}  // namespace adamac

#endif  // ADAMAC_CSMA_CA_H_
