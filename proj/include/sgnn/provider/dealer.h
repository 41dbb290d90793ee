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
#include <utility>
#include <vector>

#include "sgnn/field/prf.h"
#include "sgnn/provider/correlated.h"

namespace sgnn {

// Per-party input to the MsAs pair protocol. Link i joins parties i and i+1;
// a party outside a link holds additive share 0 and multiplicative share 1.
struct MsasMaterial {
  // [link][pair]
  std::vector<std::vector<std::uint64_t>> link_add;
  std::vector<std::vector<std::uint64_t>> link_mul;
  // P-2 batches of k scalar triples, one batch per left-fold step.
  std::vector<ScalarTriples> fold_triples;
  std::size_t pairs() const { return link_add.empty() ? 0 : link_add.front().size(); }
};

// Offline-only trusted sampler standing in for OT/HE triple generation and
// for the two-party additive-to-multiplicative conversion. Output vectors
// are indexed by party.
class Dealer {
 public:
  Dealer(const Seed& master, int parties);

  int parties() const { return parties_; }

  std::vector<MatrixBeaverTriple> beaver_matrix(std::uint32_t client_id, std::uint32_t layer,
                                                std::size_t n_max, std::size_t k,
                                                std::size_t k_out) const;
  // Deals shares of the given A and B; for hand-checked tests.
  std::vector<MatrixBeaverTriple> beaver_matrix_from(const Matrix& a, const Matrix& b,
                                                     std::uint64_t id) const;

  std::vector<ScalarTriples> scalar_triples(std::uint32_t stream, std::size_t count) const;
  std::vector<TruncationPool> truncation(std::uint32_t stream, std::size_t count,
                                         int fraction_bits) const;
  // Deals a pair for a chosen r (r < 2^59).
  std::vector<TruncationPool> truncation_for(const std::vector<std::uint64_t>& r,
                                             int fraction_bits, std::uint32_t stream) const;
  std::vector<ComparePool> compare(std::uint32_t stream, std::size_t count) const;

  // Two-party conversion: given the two additive shares of R_i (nonzero sum)
  // return multiplicative shares with the same product.
  std::pair<std::uint64_t, std::uint64_t> convert_two_party(std::uint64_t x_lo,
                                                            std::uint64_t x_hi,
                                                            std::uint64_t index,
                                                            std::uint32_t stream) const;
  // Samples X values per link side (resampling a zero link sum), converts
  // each link, and deals the fold triples.
  std::vector<MsasMaterial> msas_material(std::uint32_t stream, std::size_t count) const;

 private:
  SeededPrf prf_;
  int parties_;
};

// Bit width of dealt truncation masks.
inline constexpr int kTruncationMaskBits = 59;
// Comparison multiplier t is drawn from [1, 2^kCompareMaskBits).
inline constexpr int kCompareMaskBits = 20;

}  // namespace sgnn
