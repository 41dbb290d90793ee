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
#include <functional>
#include <vector>

#include "sgnn/client/graph.h"
#include "sgnn/field/matrix.h"
#include "sgnn/model/model_io.h"

namespace sgnn {

// Graph as the model consumes it: self-loops added when the architecture asks
// for them, weights dropped for an unweighted model and set to 1 for a
// weighted model given an unweighted graph.
PlaintextGraph prepare_graph(const PlaintextGraph& g, const Architecture& arch);

// out[dst] += w * x[src] over all edges, in doubles. Unit weights when the
// graph is unweighted or `use_weights` is false.
RealMatrix plain_mpl(const RealMatrix& x, const PlaintextGraph& g, bool use_weights);

// The same aggregation in the field, with no fixed-point interpretation.
Matrix field_mpl(const Matrix& x, const std::vector<std::uint32_t>& src,
                 const std::vector<std::uint32_t>& dst);

// Called with (layer index, input activation) before every layer; used by
// batch-norm calibration.
using LayerObserver = std::function<void(std::size_t, const RealMatrix&)>;

// Double-precision forward pass of `model` over the raw graph `g`;
// prepare_graph is applied here. Batch norm uses its unfolded form.
// Returns rows x classes logits, one row after pooling.
RealMatrix plaintext_reference(const PlaintextGraph& g, const PlainModel& model,
                               const LayerObserver& observe = {});

RealMatrix graph_features(const PlaintextGraph& g);
double sigmoid(double x);

}  // namespace sgnn
