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

#include "sgnn/field/matrix.h"

#include <algorithm>
#include <cstring>
#include <string>

#include "sgnn/common/errors.h"
#include "sgnn/field/field.h"
#include "sgnn/kernels/modq.h"

namespace sgnn {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<std::uint64_t> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) throw ShapeError("matrix data size does not match shape");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

void require_same_shape(const Matrix& a, const Matrix& b, const char* what) {
  if (!a.same_shape(b)) {
    throw ShapeError(std::string(what) + ": shape " + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                     std::to_string(b.cols()));
  }
}

Matrix& Matrix::operator+=(const Matrix& o) {
  require_same_shape(*this, o, "matrix add");
  kernels::add(data_.data(), data_.data(), o.data_.data(), data_.size());
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  require_same_shape(*this, o, "matrix sub");
  kernels::sub(data_.data(), data_.data(), o.data_.data(), data_.size());
  return *this;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("matmul: inner dimensions " + std::to_string(a.cols()) + " vs " +
                     std::to_string(b.rows()));
  }
  Matrix out(a.rows(), b.cols());
  const auto& k = kernels::active();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::uint64_t* dst = out.row(i);
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const std::uint64_t s = a.at(i, j);
      if (s != 0) k.axpy(dst, s, b.row(j), b.cols());
    }
  }
  return out;
}

Matrix hadamard(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "hadamard");
  Matrix out(a.rows(), a.cols());
  kernels::mul(out.data(), a.data(), b.data(), a.size());
  return out;
}

Matrix scaled(const Matrix& a, std::uint64_t s) {
  Matrix out(a.rows(), a.cols());
  kernels::scale(out.data(), s, a.data(), a.size());
  return out;
}

void rotate_rows_into(const std::uint64_t* in, std::uint64_t* out, std::size_t rows,
                      std::size_t cols, std::size_t k) {
  if (rows == 0) return;
  k %= rows;
  // Rows [0, rows-k) move to [k, rows); rows [rows-k, rows) wrap to [0, k).
  std::memcpy(out + k * cols, in, (rows - k) * cols * sizeof(std::uint64_t));
  std::memcpy(out, in + (rows - k) * cols, k * cols * sizeof(std::uint64_t));
}

Matrix rotate_rows(const Matrix& m, std::size_t k) {
  Matrix out(m.rows(), m.cols());
  rotate_rows_into(m.data(), out.data(), m.rows(), m.cols(), k);
  return out;
}

Matrix hconcat(const std::vector<const Matrix*>& parts) {
  if (parts.empty()) return {};
  const std::size_t rows = parts.front()->rows();
  std::size_t cols = 0;
  for (const Matrix* p : parts) {
    if (p->rows() != rows) throw ShapeError("hconcat: row counts differ");
    cols += p->cols();
  }
  Matrix out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    std::uint64_t* dst = out.row(r);
    for (const Matrix* p : parts) {
      std::copy(p->row(r), p->row(r) + p->cols(), dst);
      dst += p->cols();
    }
  }
  return out;
}

void write_values(ByteWriter& w, std::span<const std::uint64_t> v) {
  w.raw({reinterpret_cast<const std::uint8_t*>(v.data()), v.size() * sizeof(std::uint64_t)});
}

void read_values(ByteReader& r, std::span<std::uint64_t> out) {
  auto bytes = r.raw(out.size() * sizeof(std::uint64_t));
  std::memcpy(out.data(), bytes.data(), bytes.size());
  for (std::uint64_t v : out) {
    if (v >= kModulus) throw FrameError("field element out of range");
  }
}

void write_matrix(ByteWriter& w, const Matrix& m) {
  w.u32(static_cast<std::uint32_t>(m.rows()));
  w.u32(static_cast<std::uint32_t>(m.cols()));
  write_values(w, m.values());
}

Matrix read_matrix(ByteReader& r) {
  const std::size_t rows = r.u32();
  const std::size_t cols = r.u32();
  if (rows * cols * sizeof(std::uint64_t) > r.remaining()) {
    throw FrameError("matrix header declares more data than present");
  }
  Matrix m(rows, cols);
  read_values(r, m.values());
  return m;
}

}  // namespace sgnn
