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

#include <array>
#include <cstdint>
#include <span>
#include <string>

#include "sgnn/common/bytes.h"

namespace sgnn {

using SessionId = std::array<std::uint8_t, 16>;

enum class Tag : std::uint16_t {
  kReadPass = 1,
  kWritePass = 2,
  kBeaverOpen = 3,
  kAlphaOpen = 4,
  kResult = 5,
  kControl = 6,
};

const char* tag_name(Tag t);

struct WireHeader {
  SessionId session{};
  std::uint32_t round = 0;
  std::uint16_t sender = 0;
  Tag tag = Tag::kControl;
};

inline constexpr std::size_t kLengthPrefixBytes = 4;
inline constexpr std::size_t kHeaderBytes = 16 + 4 + 2 + 2;
inline constexpr std::size_t kFrameOverhead = kLengthPrefixBytes + kHeaderBytes;
// Refuse frames above this size instead of trusting a corrupt prefix.
inline constexpr std::size_t kMaxFrameBytes = std::size_t{1} << 32;

// Length prefix (header + payload, little-endian u32), header, payload.
Bytes encode_frame(const WireHeader& h, std::span<const std::uint8_t> payload);

struct Frame {
  WireHeader header;
  Bytes payload;
};

// `body` excludes the length prefix.
Frame decode_frame_body(std::span<const std::uint8_t> body);
// Full frame including the prefix; checks the declared length.
Frame decode_frame(std::span<const std::uint8_t> frame);

std::string session_hex(const SessionId& id);

}  // namespace sgnn
