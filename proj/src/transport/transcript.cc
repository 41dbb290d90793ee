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

#include "sgnn/transport/transcript.h"

#include <numeric>

#include "sgnn/field/prf.h"

namespace sgnn {

Transcript::Transcript(int parties) : sent_(parties, 0), received_(parties, 0) {
  ensure_crypto();
  crypto_hash_sha256_init(&hash_);
}

void Transcript::absorb(std::uint8_t direction, int peer, std::span<const std::uint8_t> frame) {
  const std::uint8_t tag[3] = {direction, static_cast<std::uint8_t>(peer & 0xff),
                               static_cast<std::uint8_t>(peer >> 8)};
  crypto_hash_sha256_update(&hash_, tag, sizeof tag);
  crypto_hash_sha256_update(&hash_, frame.data(), frame.size());
}

void Transcript::on_send(int peer, std::span<const std::uint8_t> frame) {
  sent_[peer] += frame.size();
  phases_[phase_].bytes_sent += frame.size();
  ++messages_sent_;
  sent_since_receive_ = true;
  absorb('S', peer, frame);
}

void Transcript::on_receive(int peer, std::span<const std::uint8_t> frame) {
  if (sent_since_receive_) {
    ++rounds_;
    ++phases_[phase_].rounds;
    sent_since_receive_ = false;
  }
  received_[peer] += frame.size();
  phases_[phase_].bytes_received += frame.size();
  absorb('R', peer, frame);
}

std::uint64_t Transcript::total_sent() const {
  return std::accumulate(sent_.begin(), sent_.end(), std::uint64_t{0});
}

std::uint64_t Transcript::total_received() const {
  return std::accumulate(received_.begin(), received_.end(), std::uint64_t{0});
}

std::string Transcript::digest_hex() const {
  crypto_hash_sha256_state copy = hash_;
  std::uint8_t out[crypto_hash_sha256_BYTES];
  crypto_hash_sha256_final(&copy, out);
  char hex[2 * crypto_hash_sha256_BYTES + 1];
  sodium_bin2hex(hex, sizeof hex, out, sizeof out);
  return hex;
}

}  // namespace sgnn
