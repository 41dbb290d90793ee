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

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "sgnn/field/field.h"
#include "sgnn/field/matrix.h"
#include "sgnn/model/model_io.h"
#include "sgnn/runtime/parties.h"
#include "sgnn/runtime/pipeline.h"

namespace sgnn::testing {

// Hand-rolled generator for property tests. Field draws hit the edges of the
// range (0, 1, q-1, q-2, 2^32 neighbours) about one time in eight.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t u64() { return rng_(); }
  std::uint64_t below(std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng_); }
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  bool coin() { return (rng_() & 1) != 0; }

  std::uint64_t element() {
    static constexpr std::uint64_t kEdges[] = {0,
                                               1,
                                               2,
                                               kModulus - 1,
                                               kModulus - 2,
                                               (std::uint64_t{1} << 32) - 1,
                                               std::uint64_t{1} << 32,
                                               (kModulus - 1) / 2,
                                               (kModulus + 1) / 2};
    if (below(8) == 0) return kEdges[below(std::size(kEdges))];
    return rng_() % kModulus;
  }
  std::uint64_t nonzero() {
    std::uint64_t v = 0;
    while (v == 0) v = element();
    return v;
  }
  Matrix matrix(std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (auto& v : m.values()) v = element();
    return m;
  }

 private:
  std::mt19937_64 rng_;
};

// Runs fn(session) for every party over a loopback network; returns the
// transcripts.
inline std::vector<Transcript> run_loopback(int parties, const std::function<void(Session&)>& fn,
                                            std::uint8_t session_byte = 7) {
  SessionId id{};
  id.fill(session_byte);
  return run_parties(Backend::kLoopback, parties, id, fn);
}

// Splits `model`, runs the offline phase sized for `g` and one secure
// inference. `inferences` sizes the pools for repeated runs on `states`.
struct SecureSetup {
  std::vector<PartyState> states;
  InferenceOptions options;
};

inline SecureSetup secure_setup(const PlainModel& model, const PlaintextGraph& g, int parties,
                                std::uint64_t batches, std::uint64_t seed,
                                std::uint64_t inferences = 1, std::uint64_t max_edges = 0) {
  const Seed master = SeededPrf::from_u64(seed).seed();
  auto shares = split_model(model, parties, 16, derive_seed(master, "model", 0));
  OfflineOptions off;
  off.client_id = 1;
  off.parties = parties;
  off.n_max = g.nodes;
  off.max_edges = std::max<std::uint64_t>(g.edges(), max_edges);
  off.inferences = inferences;
  off.master = derive_seed(master, "offline", 0);
  SecureSetup s;
  s.states = make_party_states(shares, run_offline(model.arch, off));
  s.options.parties = parties;
  s.options.batches = batches;
  s.options.client_master = derive_seed(master, "client", 0);
  return s;
}

inline InferenceReport secure_eval(const PlainModel& model, const PlaintextGraph& g, int parties,
                                   std::uint64_t batches, std::uint64_t seed) {
  SecureSetup s = secure_setup(model, g, parties, batches, seed);
  return run_inference(g, s.states, s.options);
}

}  // namespace sgnn::testing
