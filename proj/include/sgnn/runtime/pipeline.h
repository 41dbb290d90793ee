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
#include <string>
#include <vector>

#include "sgnn/client/graph.h"
#include "sgnn/client/upload.h"
#include "sgnn/model/executor.h"
#include "sgnn/model/model_io.h"
#include "sgnn/runtime/parties.h"

namespace sgnn {

struct OfflineOptions {
  std::uint32_t client_id = 0;
  int parties = 3;
  int fraction_bits = 16;
  std::uint64_t n_max = 0;      // largest node count the client will send
  std::uint64_t max_edges = 0;  // largest raw edge count (self-loops added here)
  std::uint64_t inferences = 1;
  Seed master{};
  Backend backend = Backend::kLoopback;
};

// Sizes every pool from the architecture, deals matrix triples, truncation
// and comparison material, and runs the pair protocol between the parties
// to produce 3 AM pairs per element-wise multiplication.
std::vector<PartyOffline> run_offline(const Architecture& arch, const OfflineOptions& opt);

std::vector<PartyState> make_party_states(const std::vector<ModelShare>& model,
                                          std::vector<PartyOffline> offline);

struct InferenceOptions {
  int parties = 3;
  std::uint64_t batches = 20;  // capped at the edge count
  int fraction_bits = 16;
  Seed client_master{};
  std::uint64_t request_nonce = 0;
  std::uint64_t pad_edges_to = 0;  // fake zero-weight edges; weighted models only
  Backend backend = Backend::kLoopback;
  std::vector<std::string> addresses;
};

struct InferenceReport {
  SessionId session{};
  RealMatrix logits;   // decoded, rows x classes
  ClassResult result;  // softmax of row 0 (the graph row of a pooled model)
  std::vector<Transcript> transcripts;
  std::vector<std::vector<PhaseTiming>> timings;  // per party
  double client_ms = 0;
  double online_ms = 0;
  std::uint64_t nodes = 0;
  std::uint64_t edges = 0;  // after self-loops and padding
  std::uint64_t batches = 0;
  std::uint64_t expected_rounds = 0;
};

// Analytic per-party traffic of one message-passing layer in bytes:
// (N*K*R + M) * P * L bits with L = 64.
std::uint64_t analytic_mpl_bytes(std::uint64_t nodes, std::uint64_t cols, std::uint64_t batches,
                                 std::uint64_t edges, int parties);

// Client preparation, the parties' secure run, and client reconstruction.
InferenceReport run_inference(const PlaintextGraph& raw, std::vector<PartyState>& states,
                              const InferenceOptions& opt);

}  // namespace sgnn
