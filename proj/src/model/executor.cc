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

#include "sgnn/model/executor.h"

#include <chrono>

#include "sgnn/common/errors.h"
#include "sgnn/model/secure_layers.h"
#include "sgnn/mpl/crypt_mpl.h"
#include "sgnn/mul/beaver.h"

namespace sgnn {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void check_upload(const PartyState& state, const GraphUpload& upload, int parties) {
  const Architecture& arch = state.model.arch;
  if (upload.parties != parties || state.model.parties != parties ||
      state.offline.parties != parties) {
    throw ConfigError("party count differs between upload, model share and offline material");
  }
  if (upload.party != state.model.party || upload.party != state.offline.party) {
    throw ConfigError("upload, model share and offline material belong to different parties");
  }
  if (upload.fraction_bits != state.model.fraction_bits ||
      upload.fraction_bits != state.offline.fraction_bits) {
    throw ConfigError("fraction bits differ between upload, model share and offline material");
  }
  if (upload.features.cols() != arch.input_dim) {
    throw ShapeError("upload has " + std::to_string(upload.features.cols()) +
                     " feature columns, model expects " + std::to_string(arch.input_dim));
  }
  if (upload.xi_star.size() != arch.count(LayerType::kMpl)) {
    throw ConfigError("upload carries " + std::to_string(upload.xi_star.size()) +
                      " noise matrices for " + std::to_string(arch.count(LayerType::kMpl)) +
                      " message-passing layers");
  }
  if (arch.weighted_edges && upload.weights.size() != upload.edges.layout.edges) {
    throw ConfigError("weighted model needs one weight share per edge");
  }
  upload.edges.validate();
}

}  // namespace

std::string layer_label(const Architecture& arch, std::size_t i) {
  return std::string(layer_type_name(arch.layers[i].type)) + std::to_string(i);
}

InferenceOutput run_model(Session& session, PartyState& state, const GraphUpload& upload) {
  check_upload(state, upload, session.parties());
  const Architecture& arch = state.model.arch;
  const std::uint64_t nodes = upload.features.rows();
  const std::uint64_t edges = upload.edges.layout.edges;
  InferenceOutput out;

  TripleStore triples;
  const ResourceCount need = count_resources(arch, nodes, edges);
  if (need.elem_mul > 0) {
    PhaseScope phase(session, "triples");
    const auto start = Clock::now();
    const MulBeaverTriples m =
        beaver_m(SeededPrf(state.offline.local_seed), upload.request_nonce, need.elem_mul);
    triples = TripleStore(beaver_m_to_a(session, m, state.offline.am, "elem-mul triples"));
    out.timings.push_back({"triples", elapsed_ms(start)});
  }

  LayerContext ctx{session,     state.offline,           triples,
                   state.vcache, state.guard,            state.offline.client_id,
                   state.model.version, upload.request_nonce};
  const SeededPrf mpl_prf(upload.seed);

  Matrix x = upload.features;
  std::vector<Matrix> saved;
  std::uint32_t mpl_index = 0;
  std::uint32_t linear_index = 0;
  for (std::size_t i = 0; i < arch.layers.size(); ++i) {
    const std::string label = layer_label(arch, i);
    PhaseScope phase(session, label);
    const auto start = Clock::now();
    const SharedLayer& params = state.model.layers[i];
    switch (arch.layers[i].type) {
      case LayerType::kMpl:
        if (arch.weighted_edges) {
          x = weighted_mpl(session, x, upload.edges, upload.weights, upload.xi_star[mpl_index],
                           mpl_prf, mpl_index, triples, state.offline.truncation);
        } else {
          x = crypt_mpl(session, x, upload.edges, upload.xi_star[mpl_index], mpl_prf, mpl_index);
        }
        ++mpl_index;
        break;
      case LayerType::kLinear:
        x = linear_layer(ctx, x, linear_index++, params);
        break;
      case LayerType::kBatchNorm:
        x = batch_norm_layer(ctx, x, params);
        break;
      case LayerType::kRelu:
        x = relu_layer(ctx, x);
        break;
      case LayerType::kSigmoid:
        x = sigmoid_layer(ctx, x);
        break;
      case LayerType::kSave:
        saved.push_back(x);
        break;
      case LayerType::kConcat: {
        std::vector<const Matrix*> parts;
        for (const auto& s : saved) parts.push_back(&s);
        x = hconcat(parts);
        saved.clear();
        break;
      }
      case LayerType::kSumPool:
        x = sum_pool(x);
        break;
    }
    out.timings.push_back({label, elapsed_ms(start)});
  }
  out.result = std::move(x);
  return out;
}

}  // namespace sgnn
