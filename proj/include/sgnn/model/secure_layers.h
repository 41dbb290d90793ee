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

#include "sgnn/field/matrix.h"
#include "sgnn/model/model_io.h"
#include "sgnn/mul/beaver.h"
#include "sgnn/mul/rand_comb.h"
#include "sgnn/provider/correlated.h"
#include "sgnn/transport/session.h"

namespace sgnn {

// Per-party state a layer needs. Everything is owned by the party running
// the session; nothing here is shared across parties.
struct LayerContext {
  Session& session;
  PartyOffline& offline;
  TripleStore& triples;
  VCache& vcache;
  TripleGuard& guard;
  std::uint32_t client_id = 0;
  std::uint64_t model_version = 1;
  std::uint64_t nonce = 0;  // request nonce, names this inference's derived triples
  bool leader() const { return session.party() == 0; }
  int fraction_bits() const { return offline.fraction_bits; }
};

// X * H + B with a derived matrix triple (ordinal-th linear layer): one
// opening (U, plus V on first use) and one truncation.
Matrix linear_layer(LayerContext& ctx, const Matrix& x, std::uint32_t ordinal,
                    const SharedLayer& params);

// Folded batch norm a * x + b per column: one elem_mul and one truncation.
Matrix batch_norm_layer(LayerContext& ctx, const Matrix& x, const SharedLayer& params);

// [x > 0] * x; exact.
Matrix relu_layer(LayerContext& ctx, const Matrix& x);

// Odd degree-11 polynomial in u = x / 8, with u clamped to [-1, 1].
Matrix sigmoid_layer(LayerContext& ctx, const Matrix& x);

// Column sums over rows; local.
Matrix sum_pool(const Matrix& x);

// Coefficients of u, u^3, ..., u^11; sigmoid(8u) ~ 0.5 + sum c_k u^k.
inline constexpr std::array<double, 6> kSigmoidCoefficients = {
    1.932935868371922,   -7.597246451157387, 21.937533274454044,
    -35.283466020220544, 28.483230689536306, -8.977394310255514};
inline constexpr double kSigmoidClamp = 8.0;

// Plaintext evaluation of the same polynomial, for tests.
double sigmoid_poly(double x);

// Adds a public constant to every entry (leader only).
void add_public(Matrix& share, std::uint64_t value, bool leader);
// Adds row vector `row` (1 x cols) to every row.
void add_row_broadcast(Matrix& share, const Matrix& row);
// rows x cols matrix whose every row is `row`.
Matrix broadcast_rows(const Matrix& row, std::size_t rows);

}  // namespace sgnn
