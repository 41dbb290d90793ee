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

#include "sgnn/provider/msas.h"

#include "sgnn/common/errors.h"
#include "sgnn/field/field.h"
#include "sgnn/mul/beaver.h"

namespace sgnn {

AMPool msas_pair_batch(Session& session, const MsasMaterial& material) {
  const int links = session.parties() - 1;
  if (static_cast<int>(material.link_add.size()) != links ||
      static_cast<int>(material.link_mul.size()) != links ||
      static_cast<int>(material.fold_triples.size()) != links - 1) {
    throw ConfigError("msas: material does not match party count");
  }
  const std::size_t k = material.pairs();
  PhaseScope phase(session, "offline-msas");

  AMPool pool;
  pool.add = material.link_add[0];
  for (int link = 1; link < links; ++link) {
    pool.add = beaver_multiply(session, pool.add, material.link_add[link],
                               material.fold_triples[link - 1], 0);
  }
  pool.mul.assign(k, 1);
  for (int link = 0; link < links; ++link) {
    for (std::size_t j = 0; j < k; ++j) {
      pool.mul[j] = field::mul(pool.mul[j], material.link_mul[link][j]);
    }
  }
  return pool;
}

}  // namespace sgnn
