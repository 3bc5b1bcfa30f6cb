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

#include "adamac/csma_ca.h"

#include <algorithm>
#include <cstdio>
#include <cstdlib>

namespace adamac {

CsmaStats& CsmaStats::operator+=(const CsmaStats& o) {
  attempts += o.attempts;
  backoff_draws += o.backoff_draws;
  ccas += o.ccas;
  busy_ccas += o.busy_ccas;
  transmissions += o.transmissions;
  delivered += o.delivered;
  channel_access_failures += o.channel_access_failures;
  retry_failures += o.retry_failures;
  deferrals += o.deferrals;
  max_be_seen = std::max(max_be_seen, o.max_be_seen);
  max_nb_seen = std::max(max_nb_seen, o.max_nb_seen);
  max_retries_seen = std::max(max_retries_seen, o.max_retries_seen);
  violations += o.violations;
  return *this;
}

CsmaCa::CsmaCa(Simulator& sim, RadioChannel& channel, EntityId self, CsmaParams params, RngStream rng)
    : sim_(sim), channel_(channel), self_(self), params_(params), rng_(std::move(rng)) {}

SimTime CsmaCa::NextBoundary(SimTime t) const {
  const SimTime origin = window_->origin;
  if (t <= origin) return origin;
  const uint64_t period = kBackoffPeriod.symbols();
  const uint64_t k = ((t - origin).symbols() + period - 1) / period;
  return origin + kBackoffPeriod * k;
}

void CsmaCa::SetWindow(std::optional<ContentionWindow> window) {
  window_ = window;
  if (!window_) return;
  const SimTime from = std::max(sim_.Now(), window_->start);
  if (state_ == State::kParkedBackoff) {
    ContinueBackoff(from);
  } else if (state_ == State::kParkedRedraw) {
    BeginBackoff(from);
  }
}

void CsmaCa::Start(std::size_t frame_bytes, BuildFn build, DoneFn done) {
  if (state_ != State::kIdle) {
    std::fprintf(stderr, "adamac: CSMA/CA attempt started on busy entity %u\n", self_);
    std::abort();
  }
  ++stats_.attempts;
  frame_bytes_ = frame_bytes;
  build_ = std::move(build);
  done_ = std::move(done);
  nb_ = 0;
  be_ = params_.min_be;
  cw_ = 2;
  retries_ = 0;
  awaited_seq_.reset();
  BeginBackoff(sim_.Now());
}

void CsmaCa::BeginBackoff(SimTime from) {
  const uint64_t max_periods = (uint64_t{1} << be_) - 1;
  const uint64_t periods = rng_.UniformInt(0, max_periods);
  ++stats_.backoff_draws;
  stats_.max_be_seen = std::max(stats_.max_be_seen, be_);
  Check(periods <= max_periods);
  Check(be_ >= params_.min_be && be_ <= params_.max_be);
  Check(nb_ <= params_.max_nb);
  remaining_periods_ = periods;
  ContinueBackoff(from);
}

void CsmaCa::ContinueBackoff(SimTime from) {
  if (!window_ || from >= window_->end) {
    state_ = State::kParkedBackoff;
    return;
  }
  const SimTime boundary = NextBoundary(std::max(from, window_->start));
  const uint64_t available =
      boundary < window_->end ? (window_->end - boundary).symbols() / kBackoffPeriod.symbols() : 0;
  if (remaining_periods_ > available) {
    remaining_periods_ -= available;
    state_ = State::kParkedBackoff;
    return;
  }
  const SimTime done_at = boundary + kBackoffPeriod * remaining_periods_;
  remaining_periods_ = 0;
  state_ = State::kBackoff;
  pending_ = sim_.Schedule(done_at, self_, EventKind::kBackoff, [this, done_at] { OnCountdownDone(done_at); });
}

void CsmaCa::OnCountdownDone(SimTime boundary) {
  const SimTime needed =
      kBackoffPeriod * 2 + Airtime(frame_bytes_) + kTurnaround + params_.ack_airtime;
  if (!window_ || boundary + needed > window_->end) {
    ++stats_.deferrals;
    state_ = State::kParkedRedraw;
    return;
  }
  cw_ = 2;
  DoCca(boundary);
}

void CsmaCa::DoCca(SimTime boundary) {
  state_ = State::kCca;
  pending_ = sim_.Schedule(boundary + kCcaDuration, self_, EventKind::kCca, [this, boundary] {
    ++stats_.ccas;
    if (channel_.IsBusy(sim_.Now())) {
      ++stats_.busy_ccas;
      ++nb_;
      be_ = std::min(be_ + 1, params_.max_be);
      cw_ = 2;
      Check(nb_ <= params_.max_nb + 1);
      if (nb_ > params_.max_nb) {
        Finish(CsmaOutcome::kChannelAccessFailure);
        return;
      }
      stats_.max_nb_seen = std::max(stats_.max_nb_seen, nb_);
      BeginBackoff(sim_.Now());
      return;
    }
    --cw_;
    const SimTime next = boundary + kBackoffPeriod;
    if (cw_ > 0) {
      DoCca(next);
      return;
    }
    state_ = State::kCca;
    pending_ = sim_.Schedule(next, self_, EventKind::kTxStart, [this] { Transmit(); });
  });
}

void CsmaCa::Transmit() {
  const SimTime now = sim_.Now();
  Check(window_.has_value() && (now - window_->origin).symbols() % kBackoffPeriod.symbols() == 0);
  Check(window_.has_value() && now >= window_->start && now < window_->end);
  Built built = build_();
  Check(built.bytes.size() == frame_bytes_);
  awaited_seq_ = built.seq;
  ++stats_.transmissions;
  const SimTime end = channel_.BeginTransmit(self_, std::move(built.bytes));
  state_ = State::kAwaitAck;
  pending_ = sim_.Schedule(end + params_.ack_wait, self_, EventKind::kAckTimeout, [this] { OnAckTimeout(); });
}

void CsmaCa::OnAck(uint8_t seq) {
  if (state_ != State::kAwaitAck || !awaited_seq_ || *awaited_seq_ != seq) return;
  Finish(CsmaOutcome::kDelivered);
}

void CsmaCa::OnAckTimeout() {
  pending_ = EventHandle{};
  ++retries_;
  Check(retries_ <= params_.max_frame_retries + 1);
  if (retries_ > params_.max_frame_retries) {
    Finish(CsmaOutcome::kRetryFailure);
    return;
  }
  stats_.max_retries_seen = std::max(stats_.max_retries_seen, retries_);
  nb_ = 0;
  be_ = params_.min_be;
  cw_ = 2;
  awaited_seq_.reset();
  BeginBackoff(sim_.Now());
}

void CsmaCa::Finish(CsmaOutcome outcome) {
  sim_.Cancel(pending_);
  pending_ = EventHandle{};
  awaited_seq_.reset();
  state_ = State::kIdle;
  switch (outcome) {
    case CsmaOutcome::kDelivered:
      ++stats_.delivered;
      break;
    case CsmaOutcome::kChannelAccessFailure:
      ++stats_.channel_access_failures;
      break;
    case CsmaOutcome::kRetryFailure:
      ++stats_.retry_failures;
      break;
  }
  build_ = nullptr;
  DoneFn done = std::move(done_);
  done_ = nullptr;
  if (done) done(outcome);
}

}  // namespace adamac
