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

#include "sgnn/model/gin.h"

#include "sgnn/common/errors.h"

namespace sgnn {

PlainModel make_gin_model(const GinShape& shape, const SeededPrf& rng,
                          const std::vector<PlaintextGraph>& calibration, int fraction_bits) {
  const Architecture arch =
      gin_architecture(shape.input_dim, shape.hidden, shape.classes, shape.blocks);
  PlainModel m = random_model(arch, rng, fraction_bits);
  calibrate_batchnorm(m, calibration, rng, fraction_bits);
  return m;
}

bool is_gin(const Architecture& arch) {
  if (arch.layers.empty() || !arch.self_loops) return false;
  const auto blocks = static_cast<int>(arch.count(LayerType::kMpl));
  if (blocks == 0) return false;
  const std::size_t hidden = arch.layers[1].out;
  const std::size_t classes = arch.output_dim();
  Architecture named = arch;
  named.name = "gin";
  return named.canonical() ==
         gin_architecture(arch.input_dim, hidden, classes, blocks).canonical();
}

InferenceOutput run_gin(Session& session, PartyState& state, const GraphUpload& upload) {
  if (!is_gin(state.model.arch)) throw ConfigError("model is not a GIN architecture");
  return run_model(session, state, upload);
}

}  // namespace sgnn
