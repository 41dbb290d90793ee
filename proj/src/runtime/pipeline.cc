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

#include "sgnn/runtime/pipeline.h"

#include <algorithm>
#include <chrono>

#include "sgnn/common/errors.h"
#include "sgnn/field/fixed_point.h"
#include "sgnn/field/sharing.h"
#include "sgnn/model/plaintext.h"
#include "sgnn/provider/dealer.h"
#include "sgnn/provider/msas.h"

namespace sgnn {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

enum : std::uint32_t {
  kOfflineTruncation = 1,
  kOfflineCompare = 2,
  kOfflineMsas = 3,
};

}  // namespace

std::vector<PartyOffline> run_offline(const Architecture& arch, const OfflineOptions& opt) {
  if (opt.parties < 2) throw ConfigError("offline: need at least 2 parties");
  if (opt.n_max == 0) throw ConfigError("offline: N_max must be positive");
  const std::uint64_t edges = opt.max_edges + (arch.self_loops ? opt.n_max : 0);
  const ResourceCount per = count_resources(arch, opt.n_max, edges);
  const std::uint64_t k = opt.inferences;

  const Dealer dealer(derive_seed(opt.master, "offline-client", opt.client_id), opt.parties);
  std::vector<PartyOffline> out(opt.parties);
  for (int p = 0; p < opt.parties; ++p) {
    out[p].client_id = opt.client_id;
    out[p].party = p;
    out[p].parties = opt.parties;
    out[p].fraction_bits = opt.fraction_bits;
    out[p].n_max = opt.n_max;
    out[p].local_seed = derive_seed(opt.master, "party-local",
                                    (static_cast<std::uint64_t>(opt.client_id) << 32) | p);
  }

  std::uint32_t ordinal = 0;
  for (const auto& l : arch.layers) {
    if (l.type != LayerType::kLinear) continue;
    auto t = dealer.beaver_matrix(opt.client_id, ordinal, opt.n_max, l.in, l.out);
    for (int p = 0; p < opt.parties; ++p) out[p].matrix_triples[ordinal] = std::move(t[p]);
    ++ordinal;
  }
  if (per.truncations > 0) {
    auto t = dealer.truncation(kOfflineTruncation, per.truncations * k, opt.fraction_bits);
    for (int p = 0; p < opt.parties; ++p) out[p].truncation = std::move(t[p]);
  }
  for (int p = 0; p < opt.parties; ++p) out[p].truncation.fraction_bits = opt.fraction_bits;
  if (per.compares > 0) {
    auto c = dealer.compare(kOfflineCompare, per.compares * k);
    for (int p = 0; p < opt.parties; ++p) out[p].compare = std::move(c[p]);
  }
  if (per.am_pairs() > 0) {
    const auto material = dealer.msas_material(kOfflineMsas, per.am_pairs() * k);
    SessionId sid{};
    const Seed s = derive_seed(opt.master, "offline-session", opt.client_id);
    std::copy_n(s.begin(), sid.size(), sid.begin());
    std::vector<AMPool> pools(opt.parties);
    run_parties(opt.backend, opt.parties, sid, [&](Session& session) {
      pools[session.party()] = msas_pair_batch(session, material[session.party()]);
    });
    for (int p = 0; p < opt.parties; ++p) {
      out[p].am.add = std::move(pools[p].add);
      out[p].am.mul = std::move(pools[p].mul);
    }
  }
  return out;
}

std::vector<PartyState> make_party_states(const std::vector<ModelShare>& model,
                                          std::vector<PartyOffline> offline) {
  if (model.size() != offline.size()) throw ConfigError("model shares and offline material differ in party count");
  std::vector<PartyState> out(model.size());
  for (std::size_t p = 0; p < model.size(); ++p) {
    out[p].model = model[p];
    out[p].offline = std::move(offline[p]);
  }
  return out;
}

std::uint64_t analytic_mpl_bytes(std::uint64_t nodes, std::uint64_t cols, std::uint64_t batches,
                                 std::uint64_t edges, int parties) {
  return (nodes * cols * batches + edges) * static_cast<std::uint64_t>(parties) * 64 / 8;
}

InferenceReport run_inference(const PlaintextGraph& raw, std::vector<PartyState>& states,
                              const InferenceOptions& opt) {
  if (static_cast<int>(states.size()) != opt.parties) {
    throw ConfigError("have state for " + std::to_string(states.size()) + " parties, asked for " +
                      std::to_string(opt.parties));
  }
  const Architecture& arch = states.front().model.arch;
  InferenceReport rep;

  auto start = Clock::now();
  PlaintextGraph g = prepare_graph(raw, arch);
  if (opt.pad_edges_to > g.edges()) {
    if (!arch.weighted_edges) throw ConfigError("fake edges need a weighted-edge model");
    pad_fake_edges(g, opt.pad_edges_to,
                   SeededPrf(derive_seed(opt.client_master, "fake-edges", opt.request_nonce)));
  }
  if (g.nodes > states.front().offline.n_max) {
    throw ConfigError("graph has " + std::to_string(g.nodes) + " nodes, offline material covers " +
                      std::to_string(states.front().offline.n_max));
  }
  UploadOptions up;
  up.parties = opt.parties;
  up.batches = opt.batches;
  up.fraction_bits = opt.fraction_bits;
  up.mpl_dims = arch.mpl_dims();
  up.master = opt.client_master;
  up.request_nonce = opt.request_nonce;
  const std::vector<GraphUpload> uploads = assemble_upload(g, up);
  rep.client_ms = elapsed_ms(start);
  rep.session = uploads.front().session;
  rep.nodes = g.nodes;
  rep.edges = g.edges();
  rep.batches = uploads.front().edges.layout.batches;
  rep.expected_rounds = expected_rounds(arch, opt.parties, g.nodes, g.edges());

  std::vector<Matrix> shares(opt.parties);
  rep.timings.resize(opt.parties);
  start = Clock::now();
  rep.transcripts = run_parties(
      opt.backend, opt.parties, rep.session,
      [&](Session& session) {
        const int p = session.party();
        InferenceOutput o = run_model(session, states[p], uploads[p]);
        shares[p] = std::move(o.result);
        rep.timings[p] = std::move(o.timings);
      },
      opt.addresses);
  rep.online_ms = elapsed_ms(start);

  const FixedPointCodec codec(opt.fraction_bits);
  const std::vector<double> flat = decode_all(reconstruct_additive(shares), codec);
  rep.logits = RealMatrix(shares.front().rows(), shares.front().cols());
  rep.logits.data = flat;
  rep.result = softmax_result(
      std::vector<double>(flat.begin(), flat.begin() + static_cast<long>(rep.logits.cols)));
  return rep;
}

}  // namespace sgnn
