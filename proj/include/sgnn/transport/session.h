// Copyright 2026 The sgnn Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <exception>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "sgnn/field/matrix.h"
#include "sgnn/transport/channel.h"
#include "sgnn/transport/transcript.h"
#include "sgnn/transport/wire.h"

namespace sgnn {

// One party's view of a protocol session. All parties advance a shared step
// counter in lockstep; every frame carries it as round_id and receivers
// reject frames from any other step, session or tag.
class Session {
 public:
  Session(std::unique_ptr<Channel> channel, const SessionId& id);

  int party() const { return party_; }
  int parties() const { return parties_; }
  int next() const { return (party_ + 1) % parties_; }
  int prev() const { return (party_ - 1 + parties_) % parties_; }
  const SessionId& id() const { return id_; }
  std::uint32_t step() const { return step_; }
  const char* backend() const { return channel_->backend(); }

  Transcript& transcript() { return transcript_; }
  const Transcript& transcript() const { return transcript_; }
  void set_phase(std::string phase) { transcript_.set_phase(std::move(phase)); }

  // Low-level: frames for the current step.
  std::uint32_t begin_step() { return ++step_; }
  void send(int peer, Tag tag, std::span<const std::uint8_t> payload);
  Bytes recv(int peer, Tag tag);

  // send_to_next + receive_from_prev as one step (one round).
  Bytes ring_exchange(Tag tag, std::span<const std::uint8_t> payload);

  // Every party contributes a share vector; everyone gets the mod-q sum.
  std::vector<std::uint64_t> open_sum(Tag tag, std::span<const std::uint64_t> share);
  // Same, but the opened value is the product (multiplicative shares).
  std::vector<std::uint64_t> open_product(Tag tag, std::span<const std::uint64_t> share);
  Matrix open_matrix(Tag tag, const Matrix& share);

 private:
  std::vector<std::vector<std::uint64_t>> exchange_all(Tag tag, std::span<const std::uint64_t> share);

  std::unique_ptr<Channel> channel_;
  SessionId id_;
  int party_;
  int parties_;
  std::uint32_t step_ = 0;
  Transcript transcript_;
};

// Restores the previous phase label on scope exit.
class PhaseScope {
 public:
  PhaseScope(Session& s, std::string phase)
      : s_(s), saved_(s.transcript().phase()), unwinding_(std::uncaught_exceptions()) {
    s_.set_phase(std::move(phase));
  }
  // While unwinding the phase is left alone so failure reports name the
  // phase that threw.
  ~PhaseScope() {
    if (std::uncaught_exceptions() == unwinding_) s_.set_phase(saved_);
  }
  PhaseScope(const PhaseScope&) = delete;
  PhaseScope& operator=(const PhaseScope&) = delete;

 private:
  Session& s_;
  std::string saved_;
  int unwinding_;
};

}  // namespace sgnn
