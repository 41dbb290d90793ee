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

#include "sgnn/transport/wire.h"

#include <cstring>

#include "sgnn/common/errors.h"

namespace sgnn {

const char* tag_name(Tag t) {
  switch (t) {
    case Tag::kReadPass: return "ReadPass";
    case Tag::kWritePass: return "WritePass";
    case Tag::kBeaverOpen: return "BeaverOpen";
    case Tag::kAlphaOpen: return "AlphaOpen";
    case Tag::kResult: return "Result";
    case Tag::kControl: return "Control";
  }
  return "Unknown";
}

Bytes encode_frame(const WireHeader& h, std::span<const std::uint8_t> payload) {
  const std::size_t body = kHeaderBytes + payload.size();
  if (body >= kMaxFrameBytes) throw FrameError("frame too large");
  ByteWriter w(kLengthPrefixBytes + body);
  w.u32(static_cast<std::uint32_t>(body));
  w.raw(h.session);
  w.u32(h.round);
  w.u16(h.sender);
  w.u16(static_cast<std::uint16_t>(h.tag));
  w.raw(payload);
  return w.take();
}

Frame decode_frame_body(std::span<const std::uint8_t> body) {
  ByteReader r(body);
  Frame f;
  auto sid = r.raw(16);
  std::memcpy(f.header.session.data(), sid.data(), 16);
  f.header.round = r.u32();
  f.header.sender = r.u16();
  const std::uint16_t tag = r.u16();
  if (tag < 1 || tag > 6) throw FrameError("unknown payload tag " + std::to_string(tag));
  f.header.tag = static_cast<Tag>(tag);
  auto rest = r.raw(r.remaining());
  f.payload.assign(rest.begin(), rest.end());
  return f;
}

Frame decode_frame(std::span<const std::uint8_t> frame) {
  ByteReader r(frame);
  const std::uint32_t len = r.u32();
  if (len != r.remaining()) {
    throw FrameError("length prefix " + std::to_string(len) + " but " +
                     std::to_string(r.remaining()) + " bytes follow");
  }
  return decode_frame_body(frame.subspan(kLengthPrefixBytes));
}

std::string session_hex(const SessionId& id) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  for (auto b : id) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 15]);
  }
  return out;
}

}  // namespace sgnn
