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

#include "sgnn/transport/session.h"

#include "sgnn/common/errors.h"
#include "sgnn/field/field.h"

namespace sgnn {

Session::Session(std::unique_ptr<Channel> channel, const SessionId& id)
    : channel_(std::move(channel)),
      id_(id),
      party_(channel_->party()),
      parties_(channel_->parties()),
      transcript_(parties_) {}

void Session::send(int peer, Tag tag, std::span<const std::uint8_t> payload) {
  WireHeader h{id_, step_, static_cast<std::uint16_t>(party_), tag};
  Bytes frame = encode_frame(h, payload);
  transcript_.on_send(peer, frame);
  channel_->send(peer, std::move(frame));
}

Bytes Session::recv(int peer, Tag tag) {
  Bytes raw = channel_->recv(peer);
  transcript_.on_receive(peer, raw);
  Frame f = decode_frame(raw);
  if (f.header.session != id_) throw FrameError("frame from another session");
  if (f.header.sender != peer) throw FrameError("frame sender mismatch");
  if (f.header.round != step_) {
    throw FrameError("party " + std::to_string(party_) + " expected step " +
                     std::to_string(step_) + ", got " + std::to_string(f.header.round) +
                     " from party " + std::to_string(peer));
  }
  if (f.header.tag != tag) {
    throw FrameError(std::string("expected ") + tag_name(tag) + " frame, got " +
                     tag_name(f.header.tag));
  }
  return std::move(f.payload);
}

Bytes Session::ring_exchange(Tag tag, std::span<const std::uint8_t> payload) {
  begin_step();
  send(next(), tag, payload);
  return recv(prev(), tag);
}

std::vector<std::vector<std::uint64_t>> Session::exchange_all(Tag tag,
                                                              std::span<const std::uint64_t> share) {
  begin_step();
  ByteWriter w(4 + share.size() * 8);
  w.u32(static_cast<std::uint32_t>(share.size()));
  write_values(w, share);
  for (int peer = 0; peer < parties_; ++peer) {
    if (peer != party_) send(peer, tag, w.buffer());
  }
  std::vector<std::vector<std::uint64_t>> got(parties_);
  for (int peer = 0; peer < parties_; ++peer) {
    if (peer == party_) continue;
    Bytes payload = recv(peer, tag);
    ByteReader r(payload);
    const std::uint32_t n = r.u32();
    if (n != share.size()) throw FrameError("open: peers disagree on share length");
    got[peer].resize(n);
    read_values(r, got[peer]);
    if (!r.done()) throw FrameError("open: trailing bytes");
  }
  return got;
}

std::vector<std::uint64_t> Session::open_sum(Tag tag, std::span<const std::uint64_t> share) {
  auto got = exchange_all(tag, share);
  std::vector<std::uint64_t> out(share.begin(), share.end());
  for (int peer = 0; peer < parties_; ++peer) {
    if (peer == party_) continue;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = field::add(out[i], got[peer][i]);
  }
  return out;
}

std::vector<std::uint64_t> Session::open_product(Tag tag, std::span<const std::uint64_t> share) {
  auto got = exchange_all(tag, share);
  std::vector<std::uint64_t> out(share.begin(), share.end());
  for (int peer = 0; peer < parties_; ++peer) {
    if (peer == party_) continue;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = field::mul(out[i], got[peer][i]);
  }
  return out;
}

Matrix Session::open_matrix(Tag tag, const Matrix& share) {
  auto v = open_sum(tag, share.values());
  return Matrix(share.rows(), share.cols(), std::move(v));
}

}  // namespace sgnn
