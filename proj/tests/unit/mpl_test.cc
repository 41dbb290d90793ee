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

#include <gtest/gtest.h>

#include "sgnn/client/batching.h"
#include "sgnn/client/graph.h"
#include "sgnn/client/noise_plan.h"
#include "sgnn/client/upload.h"
#include "sgnn/common/errors.h"
#include "sgnn/field/fixed_point.h"
#include "sgnn/field/sharing.h"
#include "sgnn/model/plaintext.h"
#include "sgnn/mpl/crypt_mpl.h"
#include "sgnn/mpl/streams.h"
#include "test_util.h"

namespace sgnn {
namespace {

using testing::Gen;
using testing::run_loopback;

// Restores the global hooks when a test ends.
struct HookGuard {
  ~HookGuard() { mpl_test_hooks() = MplTestHooks{}; }
};

Matrix run_crypt_mpl(const std::vector<GraphUpload>& up, std::size_t invocation = 0,
                     std::vector<Transcript>* transcripts = nullptr) {
  const int parties = static_cast<int>(up.size());
  std::vector<Matrix> out(parties);
  auto ts = run_loopback(parties, [&](Session& s) {
    const GraphUpload& u = up[s.party()];
    out[s.party()] = crypt_mpl(s, u.features, u.edges, u.xi_star[invocation], SeededPrf(u.seed),
                               static_cast<std::uint32_t>(invocation));
  });
  if (transcripts != nullptr) *transcripts = std::move(ts);
  return reconstruct_additive(out);
}

Matrix shared_features(const std::vector<GraphUpload>& up) {
  std::vector<Matrix> x;
  for (const auto& u : up) x.push_back(u.features);
  return reconstruct_additive(x);
}

TEST(Batching, Structure) {
  PlaintextGraph g;
  g.nodes = 5;
  g.feature_dim = 1;
  g.features.assign(5, 0.0);
  g.src = {1, 2, 3, 4, 0, 1};
  g.dst = {0, 0, 1, 2, 3, 4};
  const EdgeBatches b = batch_edges(g, 2);
  EXPECT_EQ(b.layout.batch_size, 3u);
  EXPECT_EQ(b.s_rel[0], 0u);
  EXPECT_EQ(b.s_rel[3], 0u);
  EXPECT_EQ(b.d_rel[0], 0u);
  const EdgeBatches all = batch_edges(g, 6);
  for (auto r : all.s_rel) EXPECT_EQ(r, 0u);
  for (auto r : all.d_rel) EXPECT_EQ(r, 0u);
  for (std::uint64_t e = 0; e < g.edges(); ++e) {
    EXPECT_EQ(b.source(e), g.src[e]);
    EXPECT_EQ(b.destination(e), g.dst[e]);
  }
  EXPECT_THROW(batch_edges(g, 7), ConfigError);
}

TEST(Batching, RandomRoundTrip) {
  Gen gen(3);
  for (int i = 0; i < 50; ++i) {
    const std::uint64_t n = 1 + gen.below(60), m = 1 + gen.below(300);
    const PlaintextGraph g = random_graph(n, 2, m, SeededPrf::from_u64(i));
    const EdgeBatches b = batch_edges(g, 1 + gen.below(m));
    const NoisePlan plan = make_noise_plan(b, 3, SeededPrf::from_u64(i).seed());
    for (std::uint64_t e = 0; e < m; ++e) {
      const std::uint64_t r = b.batch_of(e);
      std::uint64_t s = b.s_rel[e], d = b.d_rel[e];
      for (int p = 0; p < 3; ++p) {
        s += plan.s_first_shares[p][r];
        d += plan.d_first_shares[p][r];
      }
      ASSERT_EQ(s % n, g.src[e]);
      ASSERT_EQ(d % n, g.dst[e]);
    }
  }
}

TEST(Graph, ParseAndValidate) {
  const PlaintextGraph g = parse_graph("4 2 1 directed\n1 2\n3 4\n5 6\n7 8\n0 1\n");
  EXPECT_EQ(g.nodes, 4u);
  EXPECT_EQ(g.feature_dim, 2u);
  EXPECT_EQ(g.edges(), 1u);
  const PlaintextGraph u = parse_graph("3 1 2 undirected weighted\n1\n2\n3\n0 1 0.5\n2 2 1\n");
  EXPECT_EQ(u.edges(), 3u);
  EXPECT_TRUE(u.weighted());
  EXPECT_EQ(parse_graph(format_graph(u)).src, u.src);
  const PlaintextGraph empty = parse_graph("2 1 0 directed\n1\n2\n");
  EXPECT_EQ(empty.edges(), 0u);
  EXPECT_THROW(parse_graph("2 1 1 directed\n1\n2\n0 2\n"), ConfigError);
  EXPECT_THROW(parse_graph("2 1 0 directed\nnan\n2\n"), ConfigError);
  EXPECT_THROW(parse_graph("2 1 1 directed\n1\n"), ConfigError);
}

TEST(CryptMpl, MatchesFieldOracle) {
  Gen gen(4);
  for (int parties : {2, 3, 5}) {
    for (int trial = 0; trial < 4; ++trial) {
      const std::uint64_t n = 1 + gen.below(40), k = 1 + gen.below(5), m = gen.below(120);
      const PlaintextGraph g = random_graph(n, k, m, SeededPrf::from_u64(trial * 10 + parties));
      UploadOptions opt;
      opt.parties = parties;
      opt.batches = 1 + gen.below(8);
      opt.mpl_dims = {k};
      opt.master = SeededPrf::from_u64(trial).seed();
      const auto up = assemble_upload(g, opt);
      std::vector<Transcript> ts;
      const Matrix got = run_crypt_mpl(up, 0, &ts);
      EXPECT_EQ(got, field_mpl(shared_features(up), g.src, g.dst));
      EXPECT_EQ(ts[0].rounds(), static_cast<std::uint64_t>(2 * (parties - 1)));
    }
  }
}

TEST(CryptMpl, ZeroNoiseGivesZeroXi) {
  HookGuard guard;
  mpl_test_hooks().zero_noise = true;
  const PlaintextGraph g = random_graph(10, 3, 30, SeededPrf::from_u64(1));
  const EdgeBatches b = batch_edges(g, 4);
  const NoisePlan plan = make_noise_plan(b, 3, SeededPrf::from_u64(2).seed());
  EXPECT_EQ(precompute_noise(b, plan, 3, 0), Matrix(10, 3));
}

TEST(CryptMpl, SecondInvocationUsesOwnNoise) {
  const PlaintextGraph g = random_graph(12, 2, 40, SeededPrf::from_u64(5));
  UploadOptions opt;
  opt.parties = 3;
  opt.batches = 5;
  opt.mpl_dims = {2, 2};
  const auto up = assemble_upload(g, opt);
  EXPECT_NE(up[0].xi_star[0], up[0].xi_star[1]);
  EXPECT_EQ(run_crypt_mpl(up, 1), field_mpl(shared_features(up), g.src, g.dst));
}

// Four nodes, two features, a single edge from node 1 to node 2 (counting
// from one), three parties. Source index shares 3, 2, 3 and destination
// shares 1, 1, 3 in Z_4; the parties rotate the first pipeline by 2, 3, 2.
TEST(CryptMpl, GoldenToyExample) {
  HookGuard guard;
  const std::uint64_t rot[3] = {2, 3, 2};
  mpl_test_hooks().read_rotation = [&](const MplStreamKey& k) -> std::optional<std::uint64_t> {
    if (k.pipeline == 0) return rot[k.party];
    return std::nullopt;
  };
  PlaintextGraph g;
  g.nodes = 4;
  g.feature_dim = 2;
  g.features = {2, 3, 5, 7, 11, 13, 17, 19};
  g.src = {0};
  g.dst = {1};
  const EdgeBatches b = batch_edges(g, 1);
  NoisePlan plan;
  plan.parties = 3;
  for (int p = 0; p < 3; ++p) plan.seeds.push_back(derive_seed(SeededPrf::from_u64(9).seed(), "s", p));
  plan.s_first_shares = {{3}, {2}, {3}};
  plan.d_first_shares = {{1}, {1}, {3}};

  const std::uint64_t idx = simulated_read_index(b, plan, 0, 0, 0);
  EXPECT_EQ(idx, 15u);
  EXPECT_EQ(idx % 4 + 1, 4u);
  std::uint64_t dsum = 0;
  for (int p = 0; p < 3; ++p) dsum += plan.d_first_shares[p][0];
  EXPECT_EQ(dsum % 4 + 1, 2u);

  UploadOptions opt;
  opt.parties = 3;
  opt.mpl_dims = {2};
  const auto up = assemble_upload(g, b, plan, opt);

  // Party 2 finishes the pipeline that started with party 0's share and,
  // with noise off, reads exactly that share's first row.
  {
    mpl_test_hooks().zero_noise = true;
    std::vector<Matrix> reads(3);
    run_loopback(3, [&](Session& s) {
      const GraphUpload& u = up[s.party()];
      reads[s.party()] = secure_read(s, u.features, u.edges, SeededPrf(u.seed), 0);
    });
    const Matrix rotated = rotate_rows(up[0].features, 7);
    EXPECT_EQ(reads[2].at(0, 0), rotated.at(idx % 4, 0));
    EXPECT_EQ(reads[2].at(0, 1), rotated.at(idx % 4, 1));
    EXPECT_EQ(reads[2].at(0, 0), up[0].features.at(0, 0));
    mpl_test_hooks().zero_noise = false;
  }

  const Matrix out = run_crypt_mpl(up);
  const FixedPointCodec codec(16);
  EXPECT_EQ(out.at(1, 0), codec.encode(2));
  EXPECT_EQ(out.at(1, 1), codec.encode(3));
  for (std::size_t r : {0u, 2u, 3u}) {
    EXPECT_EQ(out.at(r, 0), 0u);
    EXPECT_EQ(out.at(r, 1), 0u);
  }
}

TEST(Upload, SerializeRoundTripAndFreshShares) {
  PlaintextGraph g = random_graph(9, 3, 20, SeededPrf::from_u64(7));
  g.weights.assign(g.edges(), 0.5);
  UploadOptions opt;
  opt.parties = 3;
  opt.batches = 4;
  opt.mpl_dims = {3, 3};
  opt.master = SeededPrf::from_u64(1).seed();
  const auto a = assemble_upload(g, opt);
  ASSERT_EQ(a.size(), 3u);
  for (const auto& u : a) {
    const GraphUpload back = deserialize_upload(serialize_upload(u));
    EXPECT_EQ(serialize_upload(back), serialize_upload(u));
    EXPECT_EQ(back.features, u.features);
    EXPECT_EQ(back.weights, u.weights);
    EXPECT_EQ(back.edges.s_rel, u.edges.s_rel);
  }
  const FixedPointCodec codec(16);
  EXPECT_EQ(shared_features(a), encode_matrix(g.features, 9, 3, codec));
  opt.master = SeededPrf::from_u64(2).seed();
  const auto b = assemble_upload(g, opt);
  for (int p = 0; p < 3; ++p) {
    EXPECT_NE(a[p].features, b[p].features);
    EXPECT_NE(a[p].xi_star[0], b[p].xi_star[0]);
    EXPECT_NE(a[p].weights, b[p].weights);
    EXPECT_NE(a[p].seed, b[p].seed);
  }
  EXPECT_NE(a[0].seed, a[1].seed);
}

TEST(Client, ReconstructAndSoftmax) {
  const ClassResult r = softmax_result({2.0, 1.0});
  EXPECT_EQ(r.argmax, 0u);
  EXPECT_NEAR(r.probabilities[0] + r.probabilities[1], 1.0, 1e-12);
  EXPECT_DOUBLE_EQ(softmax_result({-3.5}).probabilities[0], 1.0);
  EXPECT_THROW(reconstruct_result({Matrix(1, 2), Matrix()}, FixedPointCodec(16)), ConfigError);
}

}  // namespace
}  // namespace sgnn
