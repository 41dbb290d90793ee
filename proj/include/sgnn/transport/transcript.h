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

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <sodium.h>

namespace sgnn {

// Per-party communication record. A round is counted when the party blocks
// on a receive after having sent something since its previous receive.
class Transcript {
 public:
  explicit Transcript(int parties = 0);

  void on_send(int peer, std::span<const std::uint8_t> frame);
  void on_receive(int peer, std::span<const std::uint8_t> frame);
  void set_phase(std::string phase) { phase_ = std::move(phase); }
  const std::string& phase() const { return phase_; }

  std::uint64_t rounds() const { return rounds_; }
  std::uint64_t bytes_sent(int peer) const { return sent_[peer]; }
  std::uint64_t bytes_received(int peer) const { return received_[peer]; }
  std::uint64_t total_sent() const;
  std::uint64_t total_received() const;
  std::uint64_t messages_sent() const { return messages_sent_; }

  struct PhaseStats {
    std::uint64_t rounds = 0;
    std::uint64_t bytes_sent = 0;
    std::uint64_t bytes_received = 0;
  };
  const std::map<std::string, PhaseStats>& phases() const { return phases_; }

  // SHA-256 over every frame sent and received, in order, with direction and
  // peer. Equal digests mean byte-identical transcripts.
  std::string digest_hex() const;

 private:
  void absorb(std::uint8_t direction, int peer, std::span<const std::uint8_t> frame);

  std::string phase_ = "setup";
  std::uint64_t rounds_ = 0;
  std::uint64_t messages_sent_ = 0;
  bool sent_since_receive_ = false;
  std::vector<std::uint64_t> sent_;
  std::vector<std::uint64_t> received_;
  std::map<std::string, PhaseStats> phases_;
  crypto_hash_sha256_state hash_;
};

}  // namespace sgnn
