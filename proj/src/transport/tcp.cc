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

#include <netdb.h>
#include <netinet/in.h>
#include <netinet/tcp.h>
#include <poll.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <condition_variable>
#include <cstring>
#include <deque>
#include <mutex>
#include <thread>

#include "sgnn/common/errors.h"
#include "sgnn/transport/channel.h"

namespace sgnn {
namespace {

using Clock = std::chrono::steady_clock;

std::pair<std::string, std::string> split_host_port(const std::string& addr) {
  const auto colon = addr.rfind(':');
  if (colon == std::string::npos) throw ConfigError("address must be host:port, got " + addr);
  return {addr.substr(0, colon), addr.substr(colon + 1)};
}

void set_timeout(int fd, std::chrono::milliseconds t) {
  timeval tv{};
  tv.tv_sec = static_cast<long>(t.count() / 1000);
  tv.tv_usec = static_cast<long>((t.count() % 1000) * 1000);
  setsockopt(fd, SOL_SOCKET, SO_RCVTIMEO, &tv, sizeof tv);
  setsockopt(fd, SOL_SOCKET, SO_SNDTIMEO, &tv, sizeof tv);
  int one = 1;
  setsockopt(fd, IPPROTO_TCP, TCP_NODELAY, &one, sizeof one);
}

void write_all(int fd, const std::uint8_t* p, std::size_t n) {
  while (n > 0) {
    const ssize_t w = ::send(fd, p, n, MSG_NOSIGNAL);
    if (w < 0) {
      if (errno == EINTR) continue;
      if (errno == EAGAIN || errno == EWOULDBLOCK) throw TimeoutError("tcp send timed out");
      throw PeerDisconnected(std::string("tcp send failed: ") + std::strerror(errno));
    }
    p += w;
    n -= static_cast<std::size_t>(w);
  }
}

void read_all(int fd, std::uint8_t* p, std::size_t n) {
  while (n > 0) {
    const ssize_t r = ::recv(fd, p, n, 0);
    if (r == 0) throw PeerDisconnected("peer closed connection");
    if (r < 0) {
      if (errno == EINTR) continue;
      if (errno == EAGAIN || errno == EWOULDBLOCK) throw TimeoutError("tcp receive timed out");
      throw PeerDisconnected(std::string("tcp receive failed: ") + std::strerror(errno));
    }
    p += r;
    n -= static_cast<std::size_t>(r);
  }
}

int listen_on(const std::string& addr) {
  auto [host, port] = split_host_port(addr);
  addrinfo hints{};
  hints.ai_family = AF_INET;
  hints.ai_socktype = SOCK_STREAM;
  hints.ai_flags = AI_PASSIVE;
  addrinfo* res = nullptr;
  if (getaddrinfo(host.c_str(), port.c_str(), &hints, &res) != 0 || res == nullptr) {
    throw ConfigError("cannot resolve " + addr);
  }
  const int fd = ::socket(res->ai_family, res->ai_socktype, res->ai_protocol);
  int one = 1;
  setsockopt(fd, SOL_SOCKET, SO_REUSEADDR, &one, sizeof one);
  if (::bind(fd, res->ai_addr, res->ai_addrlen) != 0 || ::listen(fd, 64) != 0) {
    const std::string err = std::strerror(errno);
    freeaddrinfo(res);
    ::close(fd);
    throw TransportError("cannot listen on " + addr + ": " + err);
  }
  freeaddrinfo(res);
  return fd;
}

int dial(const std::string& addr, Clock::time_point deadline) {
  auto [host, port] = split_host_port(addr);
  addrinfo hints{};
  hints.ai_family = AF_INET;
  hints.ai_socktype = SOCK_STREAM;
  while (true) {
    addrinfo* res = nullptr;
    if (getaddrinfo(host.c_str(), port.c_str(), &hints, &res) == 0 && res != nullptr) {
      const int fd = ::socket(res->ai_family, res->ai_socktype, res->ai_protocol);
      const int rc = ::connect(fd, res->ai_addr, res->ai_addrlen);
      freeaddrinfo(res);
      if (rc == 0) return fd;
      ::close(fd);
    }
    if (Clock::now() > deadline) throw TimeoutError("cannot connect to " + addr);
    std::this_thread::sleep_for(std::chrono::milliseconds(20));
  }
}

// Outbound frames go through a writer thread so that a ring exchange, where
// every party sends before it receives, cannot deadlock on full socket
// buffers.
class Outbound {
 public:
  explicit Outbound(int fd) : fd_(fd), worker_([this] { run(); }) {}
  ~Outbound() {
    {
      std::lock_guard<std::mutex> lock(mu_);
      closing_ = true;
    }
    cv_.notify_all();
    worker_.join();
    ::close(fd_);
  }

  void push(Bytes frame) {
    std::lock_guard<std::mutex> lock(mu_);
    if (!error_.empty()) throw PeerDisconnected(error_);
    queue_.push_back(std::move(frame));
    cv_.notify_all();
  }

  std::string error() {
    std::lock_guard<std::mutex> lock(mu_);
    return error_;
  }

 private:
  void run() {
    while (true) {
      Bytes frame;
      {
        std::unique_lock<std::mutex> lock(mu_);
        cv_.wait(lock, [&] { return closing_ || !queue_.empty(); });
        if (queue_.empty()) return;
        frame = std::move(queue_.front());
        queue_.pop_front();
      }
      try {
        write_all(fd_, frame.data(), frame.size());
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(mu_);
        error_ = e.what();
        queue_.clear();
      }
    }
  }

  int fd_;
  std::mutex mu_;
  std::condition_variable cv_;
  std::deque<Bytes> queue_;
  bool closing_ = false;
  std::string error_;
  std::thread worker_;
};

class TcpChannel final : public Channel {
 public:
  TcpChannel(int me, int parties) : me_(me), parties_(parties), in_(parties, -1), out_(parties) {}
  ~TcpChannel() override {
    out_.clear();
    for (int fd : in_) {
      if (fd >= 0) ::close(fd);
    }
  }

  int party() const override { return me_; }
  int parties() const override { return parties_; }
  const char* backend() const override { return "socket"; }

  void send(int peer, Bytes frame) override { out_[peer]->push(std::move(frame)); }

  Bytes recv(int peer) override {
    if (auto err = out_[peer]->error(); !err.empty()) throw PeerDisconnected(err);
    Bytes frame(kLengthPrefixBytes);
    read_all(in_[peer], frame.data(), kLengthPrefixBytes);
    std::uint32_t len;
    std::memcpy(&len, frame.data(), 4);
    if (len < kHeaderBytes) throw FrameError("frame shorter than header");
    frame.resize(kLengthPrefixBytes + len);
    read_all(in_[peer], frame.data() + kLengthPrefixBytes, len);
    return frame;
  }

  int me_;
  int parties_;
  std::vector<int> in_;
  std::vector<std::unique_ptr<Outbound>> out_;
};

}  // namespace

std::unique_ptr<Channel> connect_tcp(const RingConfig& ring, const SessionId& session,
                                     std::chrono::milliseconds timeout) {
  if (ring.parties < 2) throw ConfigError("tcp: need at least 2 parties");
  if (static_cast<int>(ring.addresses.size()) != ring.parties) {
    throw ConfigError("tcp: need one address per party");
  }
  const auto deadline = Clock::now() + timeout;
  auto ch = std::make_unique<TcpChannel>(ring.me, ring.parties);
  const int listener = listen_on(ring.addresses[ring.me]);

  for (int peer = 0; peer < ring.parties; ++peer) {
    if (peer == ring.me) continue;
    const int fd = dial(ring.addresses[peer], deadline);
    set_timeout(fd, timeout);
    std::uint8_t hello[18];
    std::memcpy(hello, session.data(), 16);
    const auto me16 = static_cast<std::uint16_t>(ring.me);
    std::memcpy(hello + 16, &me16, 2);
    write_all(fd, hello, sizeof hello);
    ch->out_[peer] = std::make_unique<Outbound>(fd);
  }

  for (int accepted = 0; accepted < ring.parties - 1;) {
    pollfd pfd{listener, POLLIN, 0};
    const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - Clock::now());
    if (left.count() <= 0 || ::poll(&pfd, 1, static_cast<int>(left.count())) <= 0) {
      ::close(listener);
      throw TimeoutError("tcp: peers did not connect in time");
    }
    const int fd = ::accept(listener, nullptr, nullptr);
    if (fd < 0) continue;
    set_timeout(fd, timeout);
    std::uint8_t hello[18];
    read_all(fd, hello, sizeof hello);
    std::uint16_t from;
    std::memcpy(&from, hello + 16, 2);
    if (std::memcmp(hello, session.data(), 16) != 0 || from >= ring.parties || from == ring.me ||
        ch->in_[from] >= 0) {
      ::close(fd);
      ::close(listener);
      throw FrameError("tcp: bad handshake");
    }
    ch->in_[from] = fd;
    ++accepted;
  }
  ::close(listener);
  return ch;
}

}  // namespace sgnn
