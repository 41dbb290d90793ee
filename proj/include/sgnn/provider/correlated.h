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

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sgnn/field/matrix.h"
#include "sgnn/field/prf.h"

namespace sgnn {

// One party's shares of a matrix Beaver triple: A (N_max x K), B (K x K'),
// C = A*B (N_max x K').
struct MatrixBeaverTriple {
  std::uint64_t id = 0;
  Matrix a, b, c;
};

// One party's shares of a batch of scalar triples a*b = c.
struct ScalarTriples {
  std::vector<std::uint64_t> a, b, c;
  std::size_t size() const { return a.size(); }
};

// Records which slice of a pool each consumer took.
struct PoolUse {
  std::string consumer;
  std::uint64_t begin = 0;
  std::uint64_t count = 0;
};

// Append-only cursor shared by every pool type. take() never rewinds and
// throws PoolExhausted when the pool is short.
class PoolCursor {
 public:
  explicit PoolCursor(std::string name = {}) : name_(std::move(name)) {}

  std::uint64_t take(std::uint64_t count, std::size_t capacity, const std::string& consumer);
  std::uint64_t position() const { return cursor_; }
  const std::vector<PoolUse>& audit() const { return audit_; }

 private:
  std::string name_;
  std::uint64_t cursor_ = 0;
  std::vector<PoolUse> audit_;
};

// Additive/multiplicative pairs: sum of add shares == product of mul shares.
struct AMPool {
  std::vector<std::uint64_t> add;
  std::vector<std::uint64_t> mul;
  PoolCursor cursor{"am"};
  std::size_t size() const { return add.size(); }
  std::size_t remaining() const { return size() - cursor.position(); }
};

// r uniform in [0, 2^59) and r_hi = floor(r / 2^f), additively shared.
struct TruncationPool {
  int fraction_bits = 16;
  std::vector<std::uint64_t> r;
  std::vector<std::uint64_t> r_hi;
  PoolCursor cursor{"truncation"};
  std::size_t size() const { return r.size(); }
};

// Per element: s in {+1, -1}, s*t with t in [1, 2^20), and a scalar triple
// used to form (s*t) * x.
struct ComparePool {
  std::vector<std::uint64_t> s;
  std::vector<std::uint64_t> st;
  ScalarTriples triples;
  PoolCursor cursor{"compare"};
  std::size_t size() const { return s.size(); }
};

// Everything one party needs for one client's inferences.
struct PartyOffline {
  std::uint32_t client_id = 0;
  int party = 0;
  int parties = 0;
  int fraction_bits = 16;
  std::uint64_t n_max = 0;
  // Private randomness for locally sampled multiplicative triples.
  Seed local_seed{};
  // Keyed by linear-layer ordinal in the architecture.
  std::map<std::uint32_t, MatrixBeaverTriple> matrix_triples;
  AMPool am;
  TruncationPool truncation;
  ComparePool compare;
};

}  // namespace sgnn
