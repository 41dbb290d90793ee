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

#include "sgnn/provider/dealer.h"

#include "sgnn/common/errors.h"
#include "sgnn/field/field.h"
#include "sgnn/field/sharing.h"

namespace sgnn {
namespace {

enum DealerKind : std::uint32_t {
  kMatA = 0x100,
  kMatB,
  kMatShare,
  kScalar,
  kScalarShare,
  kTrunc,
  kTruncShare,
  kCmp,
  kCmpShare,
  kLinkX,
  kLinkMul,
};

std::vector<std::uint64_t> column(const std::vector<Matrix>& shares, int p) {
  return shares[p].values();
}

// Splits a vector of secrets into per-party vectors.
std::vector<std::vector<std::uint64_t>> deal(const SeededPrf& prf,
                                             const std::vector<std::uint64_t>& secret,
                                             int parties, StreamId id) {
  Matrix m(secret.size(), 1, secret);
  auto shares = split_additive(m, parties, prf, id);
  std::vector<std::vector<std::uint64_t>> out(parties);
  for (int p = 0; p < parties; ++p) out[p] = column(shares, p);
  return out;
}

}  // namespace

Dealer::Dealer(const Seed& master, int parties)
    : prf_(derive_seed(master, "dealer", 0)), parties_(parties) {
  if (parties < 2) throw ConfigError("dealer: need at least 2 parties");
}

std::vector<MatrixBeaverTriple> Dealer::beaver_matrix_from(const Matrix& a, const Matrix& b,
                                                           std::uint64_t id) const {
  const Matrix c = matmul(a, b);
  const auto lo = static_cast<std::uint32_t>(id);
  const auto hi = static_cast<std::uint32_t>(id >> 32);
  auto as = split_additive(a, parties_, prf_, {kMatShare, lo, hi, 0, 0});
  auto bs = split_additive(b, parties_, prf_, {kMatShare, lo, hi, 0, 1});
  auto cs = split_additive(c, parties_, prf_, {kMatShare, lo, hi, 0, 2});
  std::vector<MatrixBeaverTriple> out(parties_);
  for (int p = 0; p < parties_; ++p) {
    out[p] = {id, std::move(as[p]), std::move(bs[p]), std::move(cs[p])};
  }
  return out;
}

std::vector<MatrixBeaverTriple> Dealer::beaver_matrix(std::uint32_t client_id, std::uint32_t layer,
                                                      std::size_t n_max, std::size_t k,
                                                      std::size_t k_out) const {
  const Matrix a = prf_.matrix({kMatA, client_id, layer, 0, 0}, n_max, k);
  const Matrix b = prf_.matrix({kMatB, client_id, layer, 0, 0}, k, k_out);
  const std::uint64_t id = (std::uint64_t{client_id} << 32) | layer;
  return beaver_matrix_from(a, b, id);
}

std::vector<ScalarTriples> Dealer::scalar_triples(std::uint32_t stream, std::size_t count) const {
  std::vector<std::uint64_t> a(count), b(count), c(count);
  prf_.fill({kScalar, stream, 0, 0, 0}, 0, a.data(), count);
  prf_.fill({kScalar, stream, 1, 0, 0}, 0, b.data(), count);
  for (std::size_t i = 0; i < count; ++i) c[i] = field::mul(a[i], b[i]);
  auto as = deal(prf_, a, parties_, {kScalarShare, stream, 0, 0, 0});
  auto bs = deal(prf_, b, parties_, {kScalarShare, stream, 1, 0, 0});
  auto cs = deal(prf_, c, parties_, {kScalarShare, stream, 2, 0, 0});
  std::vector<ScalarTriples> out(parties_);
  for (int p = 0; p < parties_; ++p) out[p] = {std::move(as[p]), std::move(bs[p]), std::move(cs[p])};
  return out;
}

std::vector<TruncationPool> Dealer::truncation_for(const std::vector<std::uint64_t>& r,
                                                   int fraction_bits, std::uint32_t stream) const {
  std::vector<std::uint64_t> hi(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] >> kTruncationMaskBits) throw ConfigError("truncation mask too wide");
    hi[i] = r[i] >> fraction_bits;
  }
  auto rs = deal(prf_, r, parties_, {kTruncShare, stream, 0, 0, 0});
  auto hs = deal(prf_, hi, parties_, {kTruncShare, stream, 1, 0, 0});
  std::vector<TruncationPool> out(parties_);
  for (int p = 0; p < parties_; ++p) {
    out[p].fraction_bits = fraction_bits;
    out[p].r = std::move(rs[p]);
    out[p].r_hi = std::move(hs[p]);
  }
  return out;
}

std::vector<TruncationPool> Dealer::truncation(std::uint32_t stream, std::size_t count,
                                               int fraction_bits) const {
  std::vector<std::uint64_t> r(count);
  prf_.words({kTrunc, stream, 0, 0, 0}, 0, r.data(), count);
  for (auto& v : r) v >>= 64 - kTruncationMaskBits;
  return truncation_for(r, fraction_bits, stream);
}

std::vector<ComparePool> Dealer::compare(std::uint32_t stream, std::size_t count) const {
  std::vector<std::uint64_t> raw(count);
  prf_.words({kCmp, stream, 0, 0, 0}, 0, raw.data(), count);
  std::vector<std::uint64_t> s(count), st(count);
  const std::uint64_t t_mask = (std::uint64_t{1} << kCompareMaskBits) - 1;
  for (std::size_t i = 0; i < count; ++i) {
    const bool negative = raw[i] & 1;
    std::uint64_t t = (raw[i] >> 1) & t_mask;
    if (t == 0) t = 1;
    s[i] = negative ? field::neg(1) : 1;
    st[i] = negative ? field::neg(t) : t;
  }
  auto ss = deal(prf_, s, parties_, {kCmpShare, stream, 0, 0, 0});
  auto sts = deal(prf_, st, parties_, {kCmpShare, stream, 1, 0, 0});
  auto triples = scalar_triples(stream ^ 0x40000000u, count);
  std::vector<ComparePool> out(parties_);
  for (int p = 0; p < parties_; ++p) {
    out[p].s = std::move(ss[p]);
    out[p].st = std::move(sts[p]);
    out[p].triples = std::move(triples[p]);
  }
  return out;
}

std::pair<std::uint64_t, std::uint64_t> Dealer::convert_two_party(std::uint64_t x_lo,
                                                                  std::uint64_t x_hi,
                                                                  std::uint64_t index,
                                                                  std::uint32_t stream) const {
  const std::uint64_t r = field::add(x_lo, x_hi);
  if (r == 0) throw ConfigError("two-party conversion of a zero value");
  const std::uint64_t mu_lo = prf_.nonzero({kLinkMul, stream, 0, 0, 0}, index);
  return {mu_lo, field::mul(r, field::inverse(mu_lo))};
}

std::vector<MsasMaterial> Dealer::msas_material(std::uint32_t stream, std::size_t count) const {
  const int links = parties_ - 1;
  std::vector<MsasMaterial> out(parties_);
  for (auto& m : out) {
    m.link_add.assign(links, std::vector<std::uint64_t>(count, 0));
    m.link_mul.assign(links, std::vector<std::uint64_t>(count, 1));
  }
  for (int link = 0; link < links; ++link) {
    for (std::size_t j = 0; j < count; ++j) {
      // X values for the two link ends; a zero sum would make R = 0.
      std::uint64_t x_lo = 0, x_hi = 0;
      for (std::uint64_t attempt = 0;; ++attempt) {
        const StreamId sid{kLinkX, stream, static_cast<std::uint32_t>(link), 0, attempt};
        x_lo = prf_.element(sid, 2 * j);
        x_hi = prf_.element(sid, 2 * j + 1);
        if (field::add(x_lo, x_hi) != 0) break;
      }
      const std::uint64_t conv_index = static_cast<std::uint64_t>(link) * count + j;
      auto [mu_lo, mu_hi] = convert_two_party(x_lo, x_hi, conv_index, stream);
      out[link].link_add[link][j] = x_lo;
      out[link + 1].link_add[link][j] = x_hi;
      out[link].link_mul[link][j] = mu_lo;
      out[link + 1].link_mul[link][j] = mu_hi;
    }
  }
  for (int step = 0; step + 2 < parties_; ++step) {
    auto triples = scalar_triples(stream ^ (0x20000000u + static_cast<std::uint32_t>(step)), count);
    for (int p = 0; p < parties_; ++p) out[p].fold_triples.push_back(std::move(triples[p]));
  }
  return out;
}

}  // namespace sgnn
