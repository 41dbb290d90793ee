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

#include "sgnn/model/secure_layers.h"

#include <algorithm>
#include <cmath>

#include "sgnn/common/errors.h"
#include "sgnn/field/field.h"
#include "sgnn/field/fixed_point.h"
#include "sgnn/mul/compare.h"
#include "sgnn/mul/truncate.h"

namespace sgnn {
namespace {

Matrix elementwise(const Matrix& shape, std::vector<std::uint64_t> v) {
  return Matrix(shape.rows(), shape.cols(), std::move(v));
}

}  // namespace

void add_public(Matrix& share, std::uint64_t value, bool leader) {
  if (!leader) return;
  for (auto& v : share.values()) v = field::add(v, value);
}

void add_row_broadcast(Matrix& share, const Matrix& row) {
  if (row.rows() != 1 || row.cols() != share.cols()) throw ShapeError("row broadcast: width");
  for (std::size_t r = 0; r < share.rows(); ++r) {
    std::uint64_t* dst = share.row(r);
    for (std::size_t c = 0; c < share.cols(); ++c) dst[c] = field::add(dst[c], row.at(0, c));
  }
}

Matrix broadcast_rows(const Matrix& row, std::size_t rows) {
  Matrix out(rows, row.cols());
  for (std::size_t r = 0; r < rows; ++r) std::copy_n(row.data(), row.cols(), out.row(r));
  return out;
}

Matrix sum_pool(const Matrix& x) {
  Matrix out(1, x.cols());
  for (std::size_t r = 0; r < x.rows(); ++r) {
    for (std::size_t c = 0; c < x.cols(); ++c) out.at(0, c) = field::add(out.at(0, c), x.at(r, c));
  }
  return out;
}

Matrix linear_layer(LayerContext& ctx, const Matrix& x, std::uint32_t ordinal,
                    const SharedLayer& params) {
  auto it = ctx.offline.matrix_triples.find(ordinal);
  if (it == ctx.offline.matrix_triples.end()) {
    throw PoolExhausted("no matrix triple for linear layer " + std::to_string(ordinal));
  }
  const MatrixBeaverTriple& t = it->second;
  if (t.a.cols() != x.cols() || t.b.cols() != params.weight.cols() ||
      params.weight.rows() != x.cols()) {
    throw ShapeError("linear layer " + std::to_string(ordinal) + ": triple is " +
                     std::to_string(t.b.rows()) + "x" + std::to_string(t.b.cols()) +
                     ", layer needs " + std::to_string(x.cols()) + "x" +
                     std::to_string(params.weight.cols()));
  }
  if (x.rows() > t.a.rows()) {
    throw ShapeError("linear layer " + std::to_string(ordinal) + ": " + std::to_string(x.rows()) +
                     " rows exceed N_max " + std::to_string(t.a.rows()));
  }
  const DerivedTriple derived = rand_comb(t, x.rows(), ctx.nonce);
  MatMulOutput out = mat_mul(ctx.session, x, params.weight, derived, ctx.vcache,
                             {ctx.client_id, ordinal, ctx.model_version}, ctx.guard);
  Matrix y = truncate(ctx.session, out.z, ctx.offline.truncation,
                      "linear " + std::to_string(ordinal));
  add_row_broadcast(y, params.bias);
  return y;
}

Matrix batch_norm_layer(LayerContext& ctx, const Matrix& x, const SharedLayer& params) {
  if (params.weight.cols() != x.cols()) throw ShapeError("batch norm: width mismatch");
  Matrix prod = elem_mul(ctx.session, x, broadcast_rows(params.weight, x.rows()), ctx.triples,
                         "batchnorm");
  Matrix y = truncate(ctx.session, prod, ctx.offline.truncation, "batchnorm");
  add_row_broadcast(y, params.bias);
  return y;
}

Matrix relu_layer(LayerContext& ctx, const Matrix& x) {
  Matrix bits = elementwise(x, compare_gtz(ctx.session, x.values(), ctx.offline.compare, "relu"));
  return elem_mul(ctx.session, bits, x, ctx.triples, "relu");
}

Matrix sigmoid_layer(LayerContext& ctx, const Matrix& x) {
  const FixedPointCodec codec(ctx.fraction_bits());
  const bool leader = ctx.leader();
  const std::uint64_t one = codec.encode(1.0);
  const std::size_t n = x.size();
  TruncationPool& tp = ctx.offline.truncation;

  Matrix u = truncate(ctx.session, scaled(x, codec.encode(1.0 / kSigmoidClamp)), tp, "sigmoid");

  // Clamp u to [-1, 1]: bits of u - 1 > 0 and -u - 1 > 0 in one comparison.
  std::vector<std::uint64_t> probe(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    probe[i] = u.data()[i];
    probe[n + i] = field::neg(u.data()[i]);
    if (leader) {
      probe[i] = field::sub(probe[i], one);
      probe[n + i] = field::sub(probe[n + i], one);
    }
  }
  const std::vector<std::uint64_t> bits = compare_gtz(ctx.session, probe, ctx.offline.compare,
                                                      "sigmoid clamp");
  // u + hi * (1 - u) + lo * (-1 - u)
  Matrix gaps(1, 2 * n), sel(1, 2 * n, bits);
  for (std::size_t i = 0; i < n; ++i) {
    gaps.data()[i] = field::neg(u.data()[i]);
    gaps.data()[n + i] = field::neg(u.data()[i]);
    if (leader) {
      gaps.data()[i] = field::add(gaps.data()[i], one);
      gaps.data()[n + i] = field::sub(gaps.data()[n + i], one);
    }
  }
  const Matrix moved = elem_mul(ctx.session, sel, gaps, ctx.triples, "sigmoid clamp");
  for (std::size_t i = 0; i < n; ++i) {
    u.data()[i] = field::add(u.data()[i], field::add(moved.data()[i], moved.data()[n + i]));
  }

  auto mul_trunc = [&](const std::vector<const Matrix*>& lhs,
                       const std::vector<const Matrix*>& rhs) {
    std::vector<std::uint64_t> a, b;
    a.reserve(lhs.size() * n);
    b.reserve(lhs.size() * n);
    for (std::size_t j = 0; j < lhs.size(); ++j) {
      a.insert(a.end(), lhs[j]->values().begin(), lhs[j]->values().end());
      b.insert(b.end(), rhs[j]->values().begin(), rhs[j]->values().end());
    }
    const std::size_t len = a.size();
    const Matrix prod = elem_mul(ctx.session, Matrix(1, len, std::move(a)),
                                 Matrix(1, len, std::move(b)), ctx.triples, "sigmoid");
    const std::vector<std::uint64_t> t = truncate(ctx.session, prod.values(), tp, "sigmoid");
    std::vector<Matrix> out;
    for (std::size_t j = 0; j < lhs.size(); ++j) {
      out.emplace_back(x.rows(), x.cols(),
                       std::vector<std::uint64_t>(t.begin() + j * n, t.begin() + (j + 1) * n));
    }
    return out;
  };

  const Matrix u2 = std::move(mul_trunc({&u}, {&u})[0]);
  auto l2 = mul_trunc({&u, &u2}, {&u2, &u2});
  const Matrix& u3 = l2[0];
  const Matrix& u4 = l2[1];
  auto l3 = mul_trunc({&u, &u3}, {&u4, &u4});
  const Matrix& u5 = l3[0];
  const Matrix& u7 = l3[1];
  auto l4 = mul_trunc({&u5, &u7}, {&u4, &u4});
  const Matrix& u9 = l4[0];
  const Matrix& u11 = l4[1];

  const std::array<const Matrix*, 6> powers = {&u, &u3, &u5, &u7, &u9, &u11};
  Matrix acc(x.rows(), x.cols());
  for (std::size_t k = 0; k < powers.size(); ++k) {
    acc += scaled(*powers[k], codec.encode(kSigmoidCoefficients[k]));
  }
  Matrix y = truncate(ctx.session, acc, tp, "sigmoid");
  add_public(y, codec.encode(0.5), leader);
  return y;
}

double sigmoid_poly(double x) {
  const double u = std::clamp(x / kSigmoidClamp, -1.0, 1.0);
  const double u2 = u * u;
  double p = 0.0, uk = u;
  for (double c : kSigmoidCoefficients) {
    p += c * uk;
    uk *= u2;
  }
  return 0.5 + p;
}

}  // namespace sgnn
