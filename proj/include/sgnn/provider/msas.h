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

#include "sgnn/provider/correlated.h"
#include "sgnn/provider/dealer.h"
#include "sgnn/transport/session.h"

namespace sgnn {

// Builds k additive/multiplicative pairs from per-link material:
// [R] = [R_0] * [R_1] * ... * [R_{P-2}] multiplied left to right with the
// dealt scalar triples (P-2 rounds, each batched over all k pairs), and
// <R>_p = product of this party's link multiplicative shares (local).
AMPool msas_pair_batch(Session& session, const MsasMaterial& material);

}  // namespace sgnn
