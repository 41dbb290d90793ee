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

#include <cstddef>
#include <vector>

#include "sgnn/client/graph.h"
#include "sgnn/model/executor.h"
#include "sgnn/model/model_io.h"

namespace sgnn {

struct GinShape {
  std::size_t input_dim = 8;
  std::size_t hidden = 16;
  std::size_t classes = 4;
  int blocks = 3;
};

// Randomly initialized GIN with batch norm calibrated on `calibration`.
PlainModel make_gin_model(const GinShape& shape, const SeededPrf& rng,
                          const std::vector<PlaintextGraph>& calibration, int fraction_bits);

// True for architectures built by gin_architecture().
bool is_gin(const Architecture& arch);

// run_model restricted to GIN-shaped architectures.
InferenceOutput run_gin(Session& session, PartyState& state, const GraphUpload& upload);

}  // namespace sgnn
