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

#include <condition_variable>
#include <cstdlib>
#include <deque>
#include <mutex>

#include "sgnn/common/errors.h"
#include "sgnn/transport/channel.h"

namespace sgnn {

struct LoopbackNetwork::State {
  int parties;
  std::chrono::milliseconds timeout;
  std::mutex mu;
  std::condition_variable cv;
  // queues[from * parties + to]
  std::vector<std::deque<Bytes>> queues;
  bool aborted = false;
  std::string abort_reason;
};

namespace {

class LoopbackChannel final : public Channel {
 public:
  LoopbackChannel(std::shared_ptr<LoopbackNetwork::State> s, int me) : s_(std::move(s)), me_(me) {}

  int party() const override { return me_; }
  int parties() const override { return s_->parties; }
  const char* backend() const override { return "loopback"; }

  void send(int peer, Bytes frame) override {
    {
      std::lock_guard<std::mutex> lock(s_->mu);
      if (s_->aborted) throw PeerDisconnected("session aborted: " + s_->abort_reason);
      s_->queues[me_ * s_->parties + peer].push_back(std::move(frame));
    }
    s_->cv.notify_all();
  }

  Bytes recv(int peer) override {
    std::unique_lock<std::mutex> lock(s_->mu);
    auto& q = s_->queues[peer * s_->parties + me_];
    const bool ready = s_->cv.wait_for(lock, s_->timeout, [&] { return s_->aborted || !q.empty(); });
    if (!q.empty()) {
      Bytes out = std::move(q.front());
      q.pop_front();
      return out;
    }
    if (s_->aborted) throw PeerDisconnected("session aborted: " + s_->abort_reason);
    (void)ready;
    throw TimeoutError("party " + std::to_string(me_) + " timed out waiting for party " +
                       std::to_string(peer));
  }

 private:
  std::shared_ptr<LoopbackNetwork::State> s_;
  int me_;
};

}  // namespace

LoopbackNetwork::LoopbackNetwork(int parties, std::chrono::milliseconds timeout)
    : state_(std::make_shared<State>()) {
  if (parties < 2) throw ConfigError("loopback network needs at least 2 parties");
  state_->parties = parties;
  state_->timeout = timeout;
  state_->queues.resize(static_cast<std::size_t>(parties) * parties);
}

LoopbackNetwork::~LoopbackNetwork() = default;

int LoopbackNetwork::parties() const { return state_->parties; }

std::unique_ptr<Channel> LoopbackNetwork::endpoint(int party) {
  if (party < 0 || party >= state_->parties) throw ConfigError("loopback: bad party index");
  return std::make_unique<LoopbackChannel>(state_, party);
}

void LoopbackNetwork::abort(const std::string& reason) {
  {
    std::lock_guard<std::mutex> lock(state_->mu);
    if (state_->aborted) return;
    state_->aborted = true;
    state_->abort_reason = reason;
  }
  state_->cv.notify_all();
}

std::chrono::milliseconds configured_timeout() {
  if (const char* env = std::getenv("CRYPTGNN_TIMEOUT_MS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return std::chrono::milliseconds(v);
  }
  return kDefaultTimeout;
}

}  // namespace sgnn
