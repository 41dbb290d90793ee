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

#include "sgnn/runtime/parties.h"

#include <netinet/in.h>
#include <sys/socket.h>
#include <unistd.h>

#include <exception>
#include <mutex>
#include <optional>
#include <thread>

#include "sgnn/common/errors.h"
#include "sgnn/transport/channel.h"

namespace sgnn {
namespace {

struct Failure {
  int party = 0;
  std::string phase;
  std::string message;
  bool config = false;
  bool transport = false;
};

Failure describe(int party, const std::string& phase, std::exception_ptr ep) {
  Failure f{party, phase, "unknown error", false, false};
  try {
    std::rethrow_exception(ep);
  } catch (const ConfigError& e) {
    f.message = e.what();
    f.config = true;
  } catch (const PeerDisconnected& e) {
    f.message = e.what();
    f.transport = true;
  } catch (const TimeoutError& e) {
    f.message = e.what();
    f.transport = true;
  } catch (const std::exception& e) {
    f.message = e.what();
  } catch (...) {
  }
  return f;
}

}  // namespace

Backend parse_backend(const std::string& name) {
  if (name == "loopback") return Backend::kLoopback;
  if (name == "socket" || name == "tcp") return Backend::kSocket;
  throw ConfigError("unknown backend '" + name + "' (loopback or socket)");
}

const char* backend_name(Backend b) { return b == Backend::kLoopback ? "loopback" : "socket"; }

std::vector<std::string> local_addresses(int parties) {
  std::vector<int> fds;
  std::vector<std::string> out;
  for (int p = 0; p < parties; ++p) {
    const int fd = ::socket(AF_INET, SOCK_STREAM, 0);
    if (fd < 0) throw TransportError("socket() failed while picking ports");
    sockaddr_in addr{};
    addr.sin_family = AF_INET;
    addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
    addr.sin_port = 0;
    socklen_t len = sizeof(addr);
    if (::bind(fd, reinterpret_cast<sockaddr*>(&addr), sizeof(addr)) != 0 ||
        ::getsockname(fd, reinterpret_cast<sockaddr*>(&addr), &len) != 0) {
      ::close(fd);
      throw TransportError("cannot pick a free local port");
    }
    fds.push_back(fd);
    out.push_back("127.0.0.1:" + std::to_string(ntohs(addr.sin_port)));
  }
  for (int fd : fds) ::close(fd);
  return out;
}

std::vector<Transcript> run_parties(Backend backend, int parties, const SessionId& session,
                                    const PartyBody& body, std::vector<std::string> addresses) {
  if (parties < 2) throw ConfigError("need at least 2 parties");
  const auto timeout = configured_timeout();
  std::optional<LoopbackNetwork> net;
  if (backend == Backend::kLoopback) {
    net.emplace(parties, timeout);
  } else {
    if (addresses.empty()) addresses = local_addresses(parties);
    if (static_cast<int>(addresses.size()) != parties) {
      throw ConfigError("socket backend needs one host:port per party");
    }
  }

  std::vector<Transcript> transcripts(parties, Transcript(parties));
  std::mutex mu;
  std::vector<Failure> failures;
  auto fail = [&](const Failure& f) {
    std::lock_guard<std::mutex> lock(mu);
    failures.push_back(f);
    if (net) net->abort("party " + std::to_string(f.party) + " failed: " + f.message);
  };

  std::vector<std::thread> threads;
  for (int p = 0; p < parties; ++p) {
    threads.emplace_back([&, p] {
      std::string phase = "connect";
      try {
        std::unique_ptr<Channel> ch;
        if (net) {
          ch = net->endpoint(p);
        } else {
          RingConfig ring{parties, p, addresses};
          ch = connect_tcp(ring, session, timeout);
        }
        Session s(std::move(ch), session);
        try {
          body(s);
        } catch (...) {
          fail(describe(p, s.transcript().phase(), std::current_exception()));
          return;
        }
        transcripts[p] = s.transcript();
      } catch (...) {
        fail(describe(p, phase, std::current_exception()));
      }
    });
  }
  for (auto& t : threads) t.join();

  if (!failures.empty()) {
    const Failure* root = &failures.front();
    for (const auto& f : failures) {
      if (!f.transport) {
        root = &f;
        break;
      }
    }
    const std::string msg = "party " + std::to_string(root->party) + " aborted in phase '" +
                            root->phase + "': " + root->message;
    if (root->config) throw ConfigError(msg);
    throw ProtocolError(msg);
  }
  return transcripts;
}

}  // namespace sgnn
