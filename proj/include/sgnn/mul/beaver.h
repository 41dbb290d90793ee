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
#include <span>
#include <string>
#include <vector>

#include "sgnn/field/field.h"
#include "sgnn/field/matrix.h"
#include "sgnn/field/prf.h"
#include "sgnn/provider/correlated.h"
#include "sgnn/transport/session.h"

namespace sgnn {

// Multiplicative-share triple batch: c_p = a_p * b_p, all nonzero.
struct MulBeaverTriples {
  std::vector<std::uint64_t> a, b, c;
  std::size_t size() const { return a.size(); }
};

// Local, communication-free sampling of `count` multiplicative triples.
MulBeaverTriples beaver_m(const SeededPrf& local, std::uint64_t nonce, std::size_t count);

// Converts a, b and c with one batched m_to_a (3 pairs per triple, one round).
ScalarTriples beaver_m_to_a(Session& session, const MulBeaverTriples& m, AMPool& pool,
                            const std::string& consumer);

// Additive triples prepared for one inference, handed out in order.
class TripleStore {
 public:
  TripleStore() = default;
  explicit TripleStore(ScalarTriples t) : t_(std::move(t)) {}
  // Index of the first of `count` unused triples.
  std::uint64_t take(std::uint64_t count, const std::string& consumer) {
    return cursor_.take(count, t_.size(), consumer);
  }
  const ScalarTriples& triples() const { return t_; }
  std::size_t remaining() const { return t_.size() - cursor_.position(); }
  const PoolCursor& cursor() const { return cursor_; }

 private:
  ScalarTriples t_;
  PoolCursor cursor_{"elem-mul triples"};
};

// Local share of x*y from opened d = x - a, e = y - b.
inline std::uint64_t beaver_combine(std::uint64_t d, std::uint64_t e, std::uint64_t a,
                                    std::uint64_t b, std::uint64_t c, bool leader) {
  std::uint64_t z = field::add(c, field::add(field::mul(d, b), field::mul(e, a)));
  if (leader) z = field::add(z, field::mul(d, e));
  return z;
}

// Entrywise product of two shared vectors using triples [begin, begin+n) of
// `t`. One open round for the whole vector.
std::vector<std::uint64_t> beaver_multiply(Session& session, std::span<const std::uint64_t> x,
                                           std::span<const std::uint64_t> y,
                                           const ScalarTriples& t, std::uint64_t begin);

// Elementwise product of shared matrices of the same shape; no truncation.
Matrix elem_mul(Session& session, const Matrix& x, const Matrix& y, TripleStore& store,
                const std::string& consumer);

}  // namespace sgnn
