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
#include <map>
#include <mutex>
#include <set>
#include <tuple>
#include <utility>

#include "sgnn/field/matrix.h"
#include "sgnn/provider/correlated.h"
#include "sgnn/transport/session.h"

namespace sgnn {

// Rows of A' and C' are the same random combinations of the rows of A and C,
// so A' * B = C' still holds. B is borrowed from the source triple.
struct DerivedTriple {
  std::uint64_t source_id = 0;
  std::uint64_t nonce = 0;
  Matrix a;
  Matrix c;
  const Matrix* b = nullptr;
};

// N_req x N_max coefficient matrix, full-field entries, a public function of
// (source triple id, nonce) so every party derives the same one.
Matrix rand_comb_coefficients(std::uint64_t source_id, std::uint64_t nonce, std::size_t n_req,
                              std::size_t n_max);

DerivedTriple rand_comb(const MatrixBeaverTriple& triple, std::size_t n_req, std::uint64_t nonce);
DerivedTriple rand_comb_with(const MatrixBeaverTriple& triple, const Matrix& coefficients,
                             std::uint64_t nonce);

// Refuses a (source triple, nonce) pair seen before.
class TripleGuard {
 public:
  void claim(std::uint64_t source_id, std::uint64_t nonce);
  std::size_t claimed() const;

 private:
  mutable std::mutex mu_;
  std::set<std::pair<std::uint64_t, std::uint64_t>> used_;
};

// Opened V = H - B per (client, layer, model version).
class VCache {
 public:
  using Key = std::tuple<std::uint32_t, std::uint32_t, std::uint64_t>;
  const Matrix* find(const Key& k) const;
  void put(const Key& k, Matrix v);
  void invalidate_model(std::uint64_t model_version);
  void clear();

 private:
  mutable std::mutex mu_;
  std::map<Key, Matrix> v_;
};

struct MatMulOutput {
  Matrix z;  // shares of X*Y, 2f fraction bits
  Matrix u;  // opened X - A'
  Matrix v;  // opened Y - B
  bool v_cached = false;
};

// Local share from opened U, V.
Matrix matmul_combine(const Matrix& u, const Matrix& v, const Matrix& a_share,
                      const Matrix& b_share, const Matrix& c_share, bool leader);

// One open round: U alone when V is cached, U and V together otherwise.
MatMulOutput mat_mul(Session& session, const Matrix& x, const Matrix& y,
                     const DerivedTriple& derived, VCache& cache, const VCache::Key& key,
                     TripleGuard& guard);

}  // namespace sgnn
