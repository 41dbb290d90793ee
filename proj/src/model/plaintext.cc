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

#include "sgnn/model/plaintext.h"

#include <cmath>

#include "sgnn/common/errors.h"
#include "sgnn/field/field.h"

namespace sgnn {

PlaintextGraph prepare_graph(const PlaintextGraph& g, const Architecture& arch) {
  if (g.feature_dim != arch.input_dim) {
    throw ConfigError("graph has " + std::to_string(g.feature_dim) + " features, model expects " +
                      std::to_string(arch.input_dim));
  }
  PlaintextGraph out = g;
  if (arch.weighted_edges && !out.weighted()) out.weights.assign(out.edges(), 1.0);
  if (!arch.weighted_edges) out.weights.clear();
  if (arch.self_loops) add_self_loops(out);
  return out;
}

RealMatrix graph_features(const PlaintextGraph& g) {
  RealMatrix x(g.nodes, g.feature_dim);
  x.data = g.features;
  return x;
}

RealMatrix plain_mpl(const RealMatrix& x, const PlaintextGraph& g, bool use_weights) {
  if (x.rows != g.nodes) throw ShapeError("plain_mpl: feature rows != nodes");
  RealMatrix out(x.rows, x.cols);
  for (std::size_t e = 0; e < g.edges(); ++e) {
    const double w = use_weights && g.weighted() ? g.weights[e] : 1.0;
    for (std::size_t c = 0; c < x.cols; ++c) out.at(g.dst[e], c) += w * x.at(g.src[e], c);
  }
  return out;
}

Matrix field_mpl(const Matrix& x, const std::vector<std::uint32_t>& src,
                 const std::vector<std::uint32_t>& dst) {
  if (src.size() != dst.size()) throw ShapeError("field_mpl: edge list lengths differ");
  Matrix out(x.rows(), x.cols());
  for (std::size_t e = 0; e < src.size(); ++e) {
    if (src[e] >= x.rows() || dst[e] >= x.rows()) throw ShapeError("field_mpl: index out of range");
    for (std::size_t c = 0; c < x.cols(); ++c) {
      out.at(dst[e], c) = field::add(out.at(dst[e], c), x.at(src[e], c));
    }
  }
  return out;
}

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

RealMatrix plaintext_reference(const PlaintextGraph& raw, const PlainModel& model,
                               const LayerObserver& observe) {
  const Architecture& arch = model.arch;
  const PlaintextGraph g = prepare_graph(raw, arch);
  RealMatrix x = graph_features(g);
  std::vector<RealMatrix> saved;
  for (std::size_t i = 0; i < arch.layers.size(); ++i) {
    if (observe) observe(i, x);
    const PlainLayer& p = model.layers[i];
    switch (arch.layers[i].type) {
      case LayerType::kMpl:
        x = plain_mpl(x, g, arch.weighted_edges);
        break;
      case LayerType::kLinear: {
        RealMatrix y(x.rows, p.weight.cols);
        for (std::size_t r = 0; r < x.rows; ++r) {
          for (std::size_t c = 0; c < y.cols; ++c) {
            double s = p.bias.data[c];
            for (std::size_t k = 0; k < x.cols; ++k) s += x.at(r, k) * p.weight.at(k, c);
            y.at(r, c) = s;
          }
        }
        x = std::move(y);
        break;
      }
      case LayerType::kBatchNorm:
        for (std::size_t r = 0; r < x.rows; ++r) {
          for (std::size_t c = 0; c < x.cols; ++c) {
            x.at(r, c) = (x.at(r, c) - p.mean.data[c]) / std::sqrt(p.var.data[c] + p.eps) *
                             p.gamma.data[c] +
                         p.beta.data[c];
          }
        }
        break;
      case LayerType::kRelu:
        for (auto& v : x.data) v = v > 0.0 ? v : 0.0;
        break;
      case LayerType::kSigmoid:
        for (auto& v : x.data) v = sigmoid(v);
        break;
      case LayerType::kSave:
        saved.push_back(x);
        break;
      case LayerType::kConcat: {
        std::size_t cols = 0;
        for (const auto& s : saved) cols += s.cols;
        RealMatrix y(x.rows, cols);
        std::size_t off = 0;
        for (const auto& s : saved) {
          for (std::size_t r = 0; r < x.rows; ++r) {
            for (std::size_t c = 0; c < s.cols; ++c) y.at(r, off + c) = s.at(r, c);
          }
          off += s.cols;
        }
        saved.clear();
        x = std::move(y);
        break;
      }
      case LayerType::kSumPool: {
        RealMatrix y(1, x.cols);
        for (std::size_t r = 0; r < x.rows; ++r) {
          for (std::size_t c = 0; c < x.cols; ++c) y.at(0, c) += x.at(r, c);
        }
        x = std::move(y);
        break;
      }
    }
  }
  return x;
}

}  // namespace sgnn
