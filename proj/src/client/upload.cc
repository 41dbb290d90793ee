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

#include "sgnn/client/upload.h"

#include <algorithm>
#include <cmath>
#include <cstring>

#include "sgnn/common/errors.h"
#include "sgnn/field/sharing.h"

namespace sgnn {
namespace {

constexpr char kMagic[8] = {'S', 'G', 'N', 'N', 'U', 'P', 'L', '1'};
constexpr std::uint32_t kUploadShareStream = 0x800;

Matrix column(const std::vector<std::uint64_t>& v) { return Matrix(v.size(), 1, v); }

}  // namespace

std::vector<std::uint64_t> encode_all(const std::vector<double>& v, const FixedPointCodec& codec) {
  std::vector<std::uint64_t> out(v.size());
  std::transform(v.begin(), v.end(), out.begin(), [&](double x) { return codec.encode(x); });
  return out;
}

Matrix encode_matrix(const std::vector<double>& v, std::size_t rows, std::size_t cols,
                     const FixedPointCodec& codec) {
  return Matrix(rows, cols, encode_all(v, codec));
}

std::vector<double> decode_all(const Matrix& m, const FixedPointCodec& codec) {
  std::vector<double> out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) out[i] = codec.decode(m.values()[i]);
  return out;
}

SessionId derive_session_id(const Seed& master, std::uint64_t request_nonce) {
  const Seed s = derive_seed(master, "session", request_nonce);
  SessionId id{};
  std::memcpy(id.data(), s.data(), id.size());
  return id;
}

std::vector<GraphUpload> assemble_upload(const PlaintextGraph& g, const EdgeBatches& batches,
                                         const NoisePlan& plan, const UploadOptions& opt) {
  g.validate();
  const int P = opt.parties;
  const FixedPointCodec codec(opt.fraction_bits);
  const SeededPrf rng(derive_seed(opt.master, "upload-shares", opt.request_nonce));
  const SessionId sid = derive_session_id(opt.master, opt.request_nonce);

  std::vector<GraphUpload> out(P);
  const Matrix x = encode_matrix(g.features, g.nodes, g.feature_dim, codec);
  auto x_shares = split_additive(x, P, rng, {kUploadShareStream, 0, 0, 0, 0});

  std::vector<std::uint64_t> enc_w;
  std::vector<std::vector<std::uint64_t>> w_shares(P);
  if (g.weighted()) {
    enc_w = encode_all(g.weights, codec);
    auto ws = split_additive(column(enc_w), P, rng, {kUploadShareStream, 1, 0, 0, 0});
    for (int p = 0; p < P; ++p) w_shares[p] = ws[p].values();
  }

  std::vector<std::vector<Matrix>> xi_shares(P);
  for (std::size_t inv = 0; inv < opt.mpl_dims.size(); ++inv) {
    const Matrix xi = precompute_noise(batches, plan, opt.mpl_dims[inv],
                                       static_cast<std::uint32_t>(inv),
                                       g.weighted() ? &enc_w : nullptr);
    // Fresh re-sharing so no party's xi* share is tied to its own seed.
    auto shares = split_additive(xi, P, rng, {kUploadShareStream, 2, static_cast<std::uint32_t>(inv), 0, 0});
    for (int p = 0; p < P; ++p) xi_shares[p].push_back(std::move(shares[p]));
  }

  for (int p = 0; p < P; ++p) {
    GraphUpload& u = out[p];
    u.session = sid;
    u.party = p;
    u.parties = P;
    u.fraction_bits = opt.fraction_bits;
    u.feature_dim = g.feature_dim;
    u.features = std::move(x_shares[p]);
    u.edges.layout = batches.layout;
    u.edges.s_first = plan.s_first_shares[p];
    u.edges.d_first = plan.d_first_shares[p];
    u.edges.s_rel = batches.s_rel;
    u.edges.d_rel = batches.d_rel;
    u.xi_star = std::move(xi_shares[p]);
    u.weights = std::move(w_shares[p]);
    u.seed = plan.seeds[p];
    u.request_nonce = opt.request_nonce;
  }
  return out;
}

std::vector<GraphUpload> assemble_upload(const PlaintextGraph& g, const UploadOptions& opt) {
  const EdgeBatches batches = batch_edges(g, g.edges() == 0 ? 1 : std::min<std::uint64_t>(opt.batches, g.edges()));
  const NoisePlan plan = make_noise_plan(batches, opt.parties, derive_seed(opt.master, "noise", opt.request_nonce));
  return assemble_upload(g, batches, plan, opt);
}

Bytes serialize_upload(const GraphUpload& u) {
  ByteWriter w;
  w.raw({reinterpret_cast<const std::uint8_t*>(kMagic), 8});
  w.raw(u.session);
  const BatchLayout& l = u.edges.layout;
  w.u32(static_cast<std::uint32_t>(l.nodes));
  w.u32(static_cast<std::uint32_t>(u.feature_dim));
  w.u32(static_cast<std::uint32_t>(l.edges));
  w.u32(static_cast<std::uint32_t>(l.batches));
  w.u32(static_cast<std::uint32_t>(u.parties));
  w.u32(static_cast<std::uint32_t>(u.fraction_bits));
  w.u32(static_cast<std::uint32_t>(u.party));
  w.u32(u.weights.empty() ? 0 : 1);
  w.u64(u.request_nonce);
  write_matrix(w, u.features);
  write_matrix(w, column(u.edges.s_first));
  write_matrix(w, column(u.edges.d_first));
  w.u32(static_cast<std::uint32_t>(u.xi_star.size()));
  for (const auto& m : u.xi_star) write_matrix(w, m);
  if (!u.weights.empty()) write_matrix(w, column(u.weights));
  for (auto v : u.edges.s_rel) w.u32(v);
  for (auto v : u.edges.d_rel) w.u32(v);
  w.raw(u.seed);
  return w.take();
}

GraphUpload deserialize_upload(const Bytes& data) {
  ByteReader r(data);
  auto magic = r.raw(8);
  if (std::memcmp(magic.data(), kMagic, 8) != 0) throw ConfigError("not an upload bundle");
  GraphUpload u;
  auto sid = r.raw(16);
  std::memcpy(u.session.data(), sid.data(), 16);
  const std::uint64_t n = r.u32();
  u.feature_dim = r.u32();
  const std::uint64_t m = r.u32();
  const std::uint64_t batches = r.u32();
  u.parties = static_cast<int>(r.u32());
  u.fraction_bits = static_cast<int>(r.u32());
  u.party = static_cast<int>(r.u32());
  const bool weighted = r.u32() & 1;
  u.request_nonce = r.u64();
  u.edges.layout = BatchLayout::make(n, m, batches);
  u.features = read_matrix(r);
  u.edges.s_first = read_matrix(r).values();
  u.edges.d_first = read_matrix(r).values();
  const std::uint32_t nxi = r.u32();
  for (std::uint32_t i = 0; i < nxi; ++i) u.xi_star.push_back(read_matrix(r));
  if (weighted) u.weights = read_matrix(r).values();
  u.edges.s_rel.resize(m);
  u.edges.d_rel.resize(m);
  for (auto& v : u.edges.s_rel) v = r.u32();
  for (auto& v : u.edges.d_rel) v = r.u32();
  auto seed = r.raw(32);
  std::memcpy(u.seed.data(), seed.data(), 32);
  if (!r.done()) throw ConfigError("upload bundle: trailing bytes");
  if (u.features.rows() != n || u.features.cols() != u.feature_dim) {
    throw ConfigError("upload bundle: feature share shape mismatch");
  }
  u.edges.validate();
  return u;
}

ClassResult softmax_result(const std::vector<double>& logits) {
  ClassResult res;
  res.logits = logits;
  if (logits.empty()) return res;
  const double mx = *std::max_element(logits.begin(), logits.end());
  double sum = 0;
  for (double l : logits) sum += std::exp(l - mx);
  for (double l : logits) res.probabilities.push_back(std::exp(l - mx) / sum);
  res.argmax = static_cast<std::size_t>(std::max_element(logits.begin(), logits.end()) - logits.begin());
  return res;
}

ClassResult reconstruct_result(const std::vector<Matrix>& shares, const FixedPointCodec& codec) {
  if (shares.empty()) throw ConfigError("reconstruct_result: missing party shares");
  for (const auto& s : shares) {
    if (s.empty()) throw ConfigError("reconstruct_result: missing party share");
  }
  return softmax_result(decode_all(reconstruct_additive(shares), codec));
}

}  // namespace sgnn
