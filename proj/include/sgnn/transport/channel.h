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

#include <chrono>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "sgnn/common/bytes.h"
#include "sgnn/transport/wire.h"

namespace sgnn {

inline constexpr std::chrono::milliseconds kDefaultTimeout{30000};

// Point-to-point byte transport for one party. Frames are opaque here;
// Session does the framing and validation.
class Channel {
 public:
  virtual ~Channel() = default;
  virtual int party() const = 0;
  virtual int parties() const = 0;
  // `frame` includes the length prefix.
  virtual void send(int peer, Bytes frame) = 0;
  // Blocks until one whole frame from `peer` arrives. Returns it including
  // the length prefix.
  virtual Bytes recv(int peer) = 0;
  virtual const char* backend() const = 0;
};

struct RingConfig {
  int parties = 0;
  int me = 0;
  // host:port per party; socket backend only.
  std::vector<std::string> addresses;

  int next() const { return (me + 1) % parties; }
  int prev() const { return (me - 1 + parties) % parties; }
};

// In-process transport: one FIFO per ordered party pair.
class LoopbackNetwork {
 public:
  explicit LoopbackNetwork(int parties, std::chrono::milliseconds timeout = kDefaultTimeout);
  ~LoopbackNetwork();

  std::unique_ptr<Channel> endpoint(int party);
  int parties() const;
  // Wakes every blocked receiver with PeerDisconnected; used when one party
  // thread fails so the others do not wait for the timeout.
  void abort(const std::string& reason);

  struct State;

 private:
  std::shared_ptr<State> state_;
};

// TCP transport: one connection per ordered pair. Each party listens on its
// own address, dials every peer, and sends (session id, party index) as a
// handshake. Blocks until all P-1 inbound and outbound links exist.
std::unique_ptr<Channel> connect_tcp(const RingConfig& ring, const SessionId& session,
                                     std::chrono::milliseconds timeout = kDefaultTimeout);

// Reads CRYPTGNN_TIMEOUT_MS if set.
std::chrono::milliseconds configured_timeout();

}  // namespace sgnn
