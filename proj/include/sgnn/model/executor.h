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
#include <string>
#include <utility>
#include <vector>

#include "sgnn/client/upload.h"
#include "sgnn/model/model_io.h"
#include "sgnn/mul/rand_comb.h"
#include "sgnn/provider/correlated.h"
#include "sgnn/transport/session.h"

namespace sgnn {

// Long-lived state of one party serving one client: its model share, the
// client's offline material, the V cache and the triple-reuse guard. Owned
// by exactly one worker.
struct PartyState {
  ModelShare model;
  PartyOffline offline;
  VCache vcache;
  TripleGuard guard;
};

struct PhaseTiming {
  std::string phase;
  double wall_ms = 0;
};

struct InferenceOutput {
  Matrix result;  // this party's share of the logits (rows x classes)
  std::vector<PhaseTiming> timings;
};

// Runs the whole architecture on one upload. Converts every element-wise
// triple the run needs in one batched round first, then executes layer by
// layer; the transcript phase is set to the layer label ("mpl0",
// "linear1", ...) while it runs.
InferenceOutput run_model(Session& session, PartyState& state, const GraphUpload& upload);

// "<type><index>", the phase label of layer i.
std::string layer_label(const Architecture& arch, std::size_t i);

}  // namespace sgnn
