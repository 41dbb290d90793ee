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
#include <vector>

#include "sgnn/client/graph.h"
#include "sgnn/common/bytes.h"
#include "sgnn/field/matrix.h"
#include "sgnn/field/prf.h"
#include "sgnn/model/architecture.h"

namespace sgnn {

struct RealMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;
  RealMatrix() = default;
  RealMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}
  double& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

// Parameters of one layer, aligned with Architecture::layers. Linear: weight
// (in x out) and bias (1 x out). Batch norm: gamma, beta, mean, var (1 x dim)
// and eps. Other layer types leave everything empty.
struct PlainLayer {
  RealMatrix weight, bias;
  RealMatrix gamma, beta, mean, var;
  double eps = 1e-5;
};

struct PlainModel {
  Architecture arch;
  std::vector<PlainLayer> layers;
  // Throws ConfigError on missing/misshaped parameters or Var + eps <= 0.
  void validate() const;
};

// Batch norm as y = a * x + b per column.
struct AffineParams {
  std::vector<double> a, b;
};
AffineParams fold_batchnorm(const PlainLayer& bn);

// One party's share of a model. Linear layers hold weight (in x out) and bias
// (1 x out); batch norm holds the folded a in `weight` and b in `bias`, both
// 1 x dim. All values carry f fraction bits.
struct SharedLayer {
  Matrix weight, bias;
};

struct ModelShare {
  Architecture arch;
  int party = 0;
  int parties = 0;
  int fraction_bits = 16;
  std::uint64_t version = 1;
  std::vector<SharedLayer> layers;
};

// Folds batch norm, encodes, and splits every parameter additively.
std::vector<ModelShare> split_model(const PlainModel& model, int parties, int fraction_bits,
                                    const Seed& seed, std::uint64_t version = 1);
// Sum of the share files, decoded; batch norm comes back folded.
std::vector<SharedLayer> reconstruct_model(const std::vector<ModelShare>& shares);

// Plain model file: magic "SGNNPLM1", canonical architecture JSON (u32
// length + text), then per parameterized layer its matrices as u32 rows,
// u32 cols and f64 values, plus eps for batch norm.
Bytes serialize_plain_model(const PlainModel& m);
PlainModel deserialize_plain_model(const Bytes& data);
void save_plain_model(const std::string& path, const PlainModel& m);
PlainModel load_plain_model(const std::string& path);

// Share file: magic "SGNNSHM1", u64 version, u32 party, parties, f, the
// canonical architecture JSON, then weight and bias matrices per layer.
Bytes serialize_model_share(const ModelShare& m);
ModelShare deserialize_model_share(const Bytes& data);
void save_model_share(const std::string& path, const ModelShare& m);
ModelShare load_model_share(const std::string& path);
std::string model_share_filename(int party);

// Random parameters on the 2^-f grid. Linear weights are uniform in
// +-1/sqrt(in), biases in +-0.1; batch norm starts as identity until
// calibrated.
PlainModel random_model(const Architecture& arch, const SeededPrf& rng, int fraction_bits);

// Sets every batch norm's mean/var from the plaintext activations reaching
// it over `graphs` (raw, prepared internally), and gamma/beta to random values near
// 1 and 0. Keeps activations O(1) so fixed-point headroom is not an issue.
void calibrate_batchnorm(PlainModel& model, const std::vector<PlaintextGraph>& graphs,
                         const SeededPrf& rng, int fraction_bits);

}  // namespace sgnn
