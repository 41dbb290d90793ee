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

#include <functional>
#include <string>
#include <vector>

#include "sgnn/transport/session.h"
#include "sgnn/transport/transcript.h"
#include "sgnn/transport/wire.h"

namespace sgnn {

enum class Backend { kLoopback, kSocket };

Backend parse_backend(const std::string& name);
const char* backend_name(Backend b);

// 127.0.0.1:<port> for `parties` ports the kernel reported free just now.
std::vector<std::string> local_addresses(int parties);

using PartyBody = std::function<void(Session&)>;

// Runs `body` once per party, each on its own thread with its own session.
// When a party throws, the others are woken (loopback) or see the closed
// sockets (socket backend); the first non-transport failure is rethrown as
// ConfigError or ProtocolError naming the party and the phase it was in.
// Returns each party's transcript.
std::vector<Transcript> run_parties(Backend backend, int parties, const SessionId& session,
                                    const PartyBody& body,
                                    std::vector<std::string> addresses = {});

}  // namespace sgnn
