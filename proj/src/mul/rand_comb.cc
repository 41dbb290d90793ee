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

#include "sgnn/mul/rand_comb.h"

#include "sgnn/common/errors.h"
#include "sgnn/field/prf.h"

namespace sgnn {
namespace {
constexpr std::uint32_t kRandCombStream = 0x400;
}  // namespace

Matrix rand_comb_coefficients(std::uint64_t source_id, std::uint64_t nonce, std::size_t n_req,
                              std::size_t n_max) {
  static const Seed public_seed = [] {
    Seed s{};
    return derive_seed(s, "rand_comb", 0);
  }();
  const SeededPrf prf(derive_seed(public_seed, "request", nonce));
  return prf.matrix({kRandCombStream, static_cast<std::uint32_t>(source_id),
                     static_cast<std::uint32_t>(source_id >> 32), 0, 0},
                    n_req, n_max);
}

DerivedTriple rand_comb_with(const MatrixBeaverTriple& triple, const Matrix& coefficients,
                             std::uint64_t nonce) {
  if (coefficients.cols() != triple.a.rows()) {
    throw ShapeError("rand_comb: coefficient width does not match N_max");
  }
  DerivedTriple d;
  d.source_id = triple.id;
  d.nonce = nonce;
  d.a = matmul(coefficients, triple.a);
  d.c = matmul(coefficients, triple.c);
  d.b = &triple.b;
  return d;
}

DerivedTriple rand_comb(const MatrixBeaverTriple& triple, std::size_t n_req, std::uint64_t nonce) {
  if (n_req > triple.a.rows()) {
    throw ConfigError("rand_comb: request of " + std::to_string(n_req) + " rows exceeds N_max " +
                      std::to_string(triple.a.rows()));
  }
  return rand_comb_with(triple, rand_comb_coefficients(triple.id, nonce, n_req, triple.a.rows()),
                        nonce);
}

void TripleGuard::claim(std::uint64_t source_id, std::uint64_t nonce) {
  std::lock_guard<std::mutex> lock(mu_);
  if (!used_.insert({source_id, nonce}).second) {
    throw ReuseError("derived triple (" + std::to_string(source_id) + ", " +
                     std::to_string(nonce) + ") used twice");
  }
}

std::size_t TripleGuard::claimed() const {
  std::lock_guard<std::mutex> lock(mu_);
  return used_.size();
}

const Matrix* VCache::find(const Key& k) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = v_.find(k);
  return it == v_.end() ? nullptr : &it->second;
}

void VCache::put(const Key& k, Matrix v) {
  std::lock_guard<std::mutex> lock(mu_);
  v_[k] = std::move(v);
}

void VCache::invalidate_model(std::uint64_t model_version) {
  std::lock_guard<std::mutex> lock(mu_);
  for (auto it = v_.begin(); it != v_.end();) {
    it = std::get<2>(it->first) == model_version ? v_.erase(it) : std::next(it);
  }
}

void VCache::clear() {
  std::lock_guard<std::mutex> lock(mu_);
  v_.clear();
}

Matrix matmul_combine(const Matrix& u, const Matrix& v, const Matrix& a_share,
                      const Matrix& b_share, const Matrix& c_share, bool leader) {
  Matrix z = matmul(u, b_share);
  z += matmul(a_share, v);
  z += c_share;
  if (leader) z += matmul(u, v);
  return z;
}

MatMulOutput mat_mul(Session& session, const Matrix& x, const Matrix& y,
                     const DerivedTriple& derived, VCache& cache, const VCache::Key& key,
                     TripleGuard& guard) {
  require_same_shape(x, derived.a, "mat_mul X vs A'");
  require_same_shape(y, *derived.b, "mat_mul Y vs B");
  guard.claim(derived.source_id, derived.nonce);

  MatMulOutput out;
  Matrix u_share = x - derived.a;
  if (const Matrix* v = cache.find(key)) {
    out.u = session.open_matrix(Tag::kBeaverOpen, u_share);
    out.v = *v;
    out.v_cached = true;
  } else {
    const Matrix v_share = y - *derived.b;
    std::vector<std::uint64_t> both(u_share.values());
    both.insert(both.end(), v_share.values().begin(), v_share.values().end());
    auto opened = session.open_sum(Tag::kBeaverOpen, both);
    const std::size_t nu = u_share.size();
    out.u = Matrix(u_share.rows(), u_share.cols(),
                   std::vector<std::uint64_t>(opened.begin(), opened.begin() + nu));
    out.v = Matrix(v_share.rows(), v_share.cols(),
                   std::vector<std::uint64_t>(opened.begin() + nu, opened.end()));
    cache.put(key, out.v);
  }
  out.z = matmul_combine(out.u, out.v, derived.a, *derived.b, derived.c, session.party() == 0);
  return out;
}

}  // namespace sgnn
