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

#include <cmath>

#include "sgnn/common/errors.h"
#include "sgnn/model/gin.h"
#include "sgnn/model/plaintext.h"
#include "sgnn/model/secure_layers.h"
#include "test_util.h"

namespace sgnn {
namespace {

using testing::secure_eval;
using testing::secure_setup;

constexpr double kUlp = 1.0 / 65536.0;

PlainModel model_of(std::size_t input, std::vector<LayerSpec> layers, std::uint64_t seed) {
  Architecture a;
  a.input_dim = input;
  a.layers = std::move(layers);
  a.validate();
  return random_model(a, SeededPrf::from_u64(seed), 16);
}

// Graph on the fixed-point grid so that linear maps are exact up to truncation.
PlaintextGraph grid_graph(std::uint64_t n, std::uint64_t k, std::uint64_t m, std::uint64_t seed,
                          double scale = 1.0) {
  PlaintextGraph g = random_graph(n, k, m, SeededPrf::from_u64(seed), scale);
  for (auto& v : g.features) v = std::round(v * 65536.0) / 65536.0;
  return g;
}

double max_diff(const RealMatrix& a, const RealMatrix& b) {
  EXPECT_EQ(a.rows, b.rows);
  EXPECT_EQ(a.cols, b.cols);
  double worst = 0;
  for (std::size_t i = 0; i < a.data.size(); ++i) {
    worst = std::max(worst, std::abs(a.data[i] - b.data[i]));
  }
  return worst;
}

TEST(SecureLinear, IdentityWeightsWithinOneUlp) {
  PlainModel m = model_of(4, {{LayerType::kLinear, 4, 4}}, 1);
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) m.layers[0].weight.at(r, c) = r == c ? 1.0 : 0.0;
  }
  for (auto& b : m.layers[0].bias.data) b = 0.0;
  const PlaintextGraph g = grid_graph(7, 4, 3, 2);
  const InferenceReport rep = secure_eval(m, g, 3, 1, 3);
  EXPECT_LE(max_diff(rep.logits, graph_features(g)), kUlp);
}

TEST(SecureLinear, ZeroInputGivesBiasExactly) {
  const PlainModel m = model_of(3, {{LayerType::kLinear, 3, 5}}, 4);
  PlaintextGraph g = grid_graph(6, 3, 2, 5);
  for (auto& v : g.features) v = 0.0;
  const InferenceReport rep = secure_eval(m, g, 2, 1, 6);
  for (std::size_t r = 0; r < 6; ++r) {
    for (std::size_t c = 0; c < 5; ++c) EXPECT_EQ(rep.logits.at(r, c), m.layers[0].bias.data[c]);
  }
}

TEST(SecureLinear, RandomMatchesPlaintext) {
  for (int parties : {2, 3, 5}) {
    const PlainModel m = model_of(6, {{LayerType::kLinear, 6, 3}}, 10 + parties);
    const PlaintextGraph g = random_graph(9, 6, 4, SeededPrf::from_u64(20 + parties));
    const InferenceReport rep = secure_eval(m, g, parties, 2, 30 + parties);
    EXPECT_LE(max_diff(rep.logits, plaintext_reference(g, m)), 1e-3) << parties;
    EXPECT_EQ(rep.transcripts[0].rounds(), rep.expected_rounds);
  }
}

TEST(SecureBatchNorm, MatchesFoldedAffine) {
  PlainModel m = model_of(4, {{LayerType::kBatchNorm}}, 7);
  m.layers[0].gamma.data = {1.5, 0.5, 1.0, 2.0};
  m.layers[0].beta.data = {0.25, -1.0, 0.0, 0.5};
  m.layers[0].mean.data = {0.1, -0.2, 0.0, 0.3};
  m.layers[0].var.data = {0.5, 2.0, 1.0, 0.25};
  const PlaintextGraph g = random_graph(8, 4, 2, SeededPrf::from_u64(8), 2.0);
  const InferenceReport rep = secure_eval(m, g, 3, 1, 9);
  EXPECT_LE(max_diff(rep.logits, plaintext_reference(g, m)), 1e-3);
}

TEST(SecureRelu, ExactOnGrid) {
  const PlainModel m = model_of(3, {{LayerType::kRelu}}, 11);
  PlaintextGraph g = grid_graph(40, 3, 2, 12, 100.0);
  g.features[0] = 0.0;
  g.features[1] = kUlp;
  g.features[2] = -kUlp;
  const InferenceReport rep = secure_eval(m, g, 3, 1, 13);
  const RealMatrix want = plaintext_reference(g, m);
  EXPECT_EQ(rep.logits.data, want.data);
  EXPECT_EQ(rep.transcripts[0].rounds(), rep.expected_rounds);
}

TEST(SecureSigmoid, CentreSaturationAndRandomInputs) {
  const PlainModel m = model_of(1, {{LayerType::kSigmoid}}, 14);
  PlaintextGraph g = grid_graph(1000, 1, 2, 15, 12.0);
  g.features[0] = 0.0;
  g.features[1] = 8.0;
  g.features[2] = -8.0;
  g.features[3] = 40.0;
  const InferenceReport rep = secure_eval(m, g, 3, 1, 16);
  EXPECT_NEAR(rep.logits.data[0], 0.5, 1e-3);
  EXPECT_GE(rep.logits.data[1], 0.99);
  EXPECT_LE(rep.logits.data[2], 0.01);
  EXPECT_GE(rep.logits.data[3], 0.99);
  double worst = 0;
  for (std::size_t i = 0; i < 1000; ++i) {
    worst = std::max(worst, std::abs(rep.logits.data[i] - sigmoid(g.features[i])));
  }
  EXPECT_LE(worst, 1e-2);
  EXPECT_EQ(rep.transcripts[0].rounds(), rep.expected_rounds);
}

TEST(SecureModel, LayersComposeInAnyOrder) {
  const std::vector<std::vector<LayerSpec>> orders = {
      {{LayerType::kRelu}, {LayerType::kLinear, 3, 3}, {LayerType::kBatchNorm}},
      {{LayerType::kBatchNorm}, {LayerType::kMpl}, {LayerType::kRelu}, {LayerType::kLinear, 3, 2}},
      {{LayerType::kLinear, 3, 3}, {LayerType::kMpl}, {LayerType::kSigmoid}, {LayerType::kSumPool}},
  };
  std::uint64_t seed = 40;
  for (const auto& layers : orders) {
    const PlainModel m = model_of(3, layers, ++seed);
    const PlaintextGraph g = random_graph(10, 3, 25, SeededPrf::from_u64(++seed));
    const InferenceReport rep = secure_eval(m, g, 3, 5, ++seed);
    // Sigmoid errors add up across the pooled rows.
    const double tol = m.arch.pooled() ? 1e-2 * static_cast<double>(g.nodes) : 1e-2;
    EXPECT_LE(max_diff(rep.logits, plaintext_reference(g, m)), tol) << seed;
    EXPECT_EQ(rep.transcripts[0].rounds(), rep.expected_rounds);
  }
}

TEST(SecureModel, GinOnSingleNode) {
  const PlainModel m = make_gin_model({3, 8, 2, 3}, SeededPrf::from_u64(50), {}, 16);
  PlaintextGraph g = random_graph(1, 3, 0, SeededPrf::from_u64(51));
  const InferenceReport rep = secure_eval(m, g, 3, 1, 52);
  EXPECT_LE(max_diff(rep.logits, plaintext_reference(g, m)), 1e-3);
  EXPECT_EQ(rep.result.argmax, softmax_result(plaintext_reference(g, m).data).argmax);
}

TEST(SecureModel, UnitWeightsMatchUnweighted) {
  const PlainModel plain = model_of(4, {{LayerType::kMpl}, {LayerType::kLinear, 4, 2}}, 60);
  PlainModel weighted = plain;
  weighted.arch.weighted_edges = true;
  const PlaintextGraph g = random_graph(12, 4, 30, SeededPrf::from_u64(61));
  const InferenceReport a = secure_eval(plain, g, 3, 4, 62);
  const InferenceReport b = secure_eval(weighted, g, 3, 4, 62);
  EXPECT_LE(max_diff(a.logits, b.logits), kUlp);
}

TEST(SecureModel, FakeEdgesLeaveOutputUnchanged) {
  PlainModel m = model_of(4, {{LayerType::kMpl}, {LayerType::kLinear, 4, 2}}, 63);
  m.arch.weighted_edges = true;
  PlaintextGraph g = random_graph(12, 4, 30, SeededPrf::from_u64(64));
  g.weights.assign(g.edges(), 0.5);
  auto s1 = secure_setup(m, g, 3, 4, 65);
  const InferenceReport a = run_inference(g, s1.states, s1.options);
  auto s2 = secure_setup(m, g, 3, 4, 65, 1, 50);
  s2.options.pad_edges_to = 50;
  const InferenceReport b = run_inference(g, s2.states, s2.options);
  EXPECT_EQ(b.edges, 50u);
  EXPECT_EQ(a.logits.data, b.logits.data);
}

TEST(SecureModel, RepeatedInferencesConsumeFreshMaterial) {
  const PlainModel m = model_of(3, {{LayerType::kMpl}, {LayerType::kLinear, 3, 2}, {LayerType::kRelu}}, 70);
  const PlaintextGraph g = random_graph(6, 3, 10, SeededPrf::from_u64(71));
  auto s = secure_setup(m, g, 2, 2, 72, 2);
  s.options.request_nonce = 1;
  const InferenceReport a = run_inference(g, s.states, s.options);
  s.options.request_nonce = 2;
  const InferenceReport b = run_inference(g, s.states, s.options);
  // Fresh truncation masks can move the last bit.
  EXPECT_LE(max_diff(a.logits, b.logits), 2 * kUlp);
  EXPECT_NE(a.transcripts[0].digest_hex(), b.transcripts[0].digest_hex());
  s.options.request_nonce = 3;
  EXPECT_THROW(run_inference(g, s.states, s.options), Error);
}

TEST(Offline, PoolSizesFollowArchitecture) {
  const PlainModel m = model_of(3, {{LayerType::kLinear, 3, 4}, {LayerType::kRelu}}, 80);
  OfflineOptions off;
  off.parties = 3;
  off.n_max = 5;
  off.max_edges = 7;
  off.inferences = 2;
  const auto offline = run_offline(m.arch, off);
  ASSERT_EQ(offline.size(), 3u);
  const ResourceCount rc = count_resources(m.arch, 5, 7);
  EXPECT_EQ(offline[0].am.size(), 2 * rc.am_pairs());
  EXPECT_EQ(offline[0].truncation.size(), 2 * rc.truncations);
  EXPECT_EQ(offline[0].compare.size(), 2 * rc.compares);

  Architecture empty;
  empty.input_dim = 3;
  const auto none = run_offline(empty, off);
  EXPECT_EQ(none[0].am.size(), 0u);
  EXPECT_EQ(none[0].truncation.size(), 0u);
}

TEST(Offline, RejectsOversizedGraph) {
  const PlainModel m = model_of(3, {{LayerType::kLinear, 3, 2}}, 90);
  const PlaintextGraph small = random_graph(4, 3, 2, SeededPrf::from_u64(91));
  auto s = secure_setup(m, small, 2, 1, 92);
  const PlaintextGraph big = random_graph(9, 3, 2, SeededPrf::from_u64(93));
  EXPECT_THROW(run_inference(big, s.states, s.options), ConfigError);
}

TEST(AnalyticCost, FormulaMatchesHandValue) {
  // (4*3*2 + 10) * 2 parties * 64 bits.
  EXPECT_EQ(analytic_mpl_bytes(4, 3, 2, 10, 2), (24u + 10u) * 2u * 8u);
}

}  // namespace
}  // namespace sgnn
