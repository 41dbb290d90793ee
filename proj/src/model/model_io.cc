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

#include "sgnn/model/model_io.h"

#include <cmath>
#include <cstring>

#include "sgnn/common/errors.h"
#include "sgnn/field/field.h"
#include "sgnn/field/fixed_point.h"
#include "sgnn/field/sharing.h"
#include "sgnn/model/plaintext.h"

namespace sgnn {
namespace {

constexpr char kPlainMagic[8] = {'S', 'G', 'N', 'N', 'P', 'L', 'M', '1'};
constexpr char kShareMagic[8] = {'S', 'G', 'N', 'N', 'S', 'H', 'M', '1'};
constexpr std::uint32_t kModelStream = 0x800;
constexpr std::uint32_t kModelShareStream = 0x801;
// Calibrated variances below this are raised to it so a near-constant column
// does not turn into a huge batch-norm gain.
constexpr double kMinCalibratedVar = 1e-2;

bool is_param(LayerType t) { return t == LayerType::kLinear || t == LayerType::kBatchNorm; }

void write_real(ByteWriter& w, const RealMatrix& m) {
  w.u32(static_cast<std::uint32_t>(m.rows));
  w.u32(static_cast<std::uint32_t>(m.cols));
  for (double v : m.data) w.f64(v);
}

RealMatrix read_real(ByteReader& r) {
  RealMatrix m;
  m.rows = r.u32();
  m.cols = r.u32();
  if (m.rows * m.cols * 8 > r.remaining()) throw ConfigError("model file: truncated matrix");
  m.data.resize(m.rows * m.cols);
  for (auto& v : m.data) v = r.f64();
  return m;
}

void expect_magic(ByteReader& r, const char (&magic)[8], const char* what) {
  auto got = r.raw(8);
  if (std::memcmp(got.data(), magic, 8) != 0) {
    throw ConfigError(std::string(what) + ": bad magic");
  }
}

void check_shape(const RealMatrix& m, std::size_t rows, std::size_t cols, const std::string& what) {
  if (m.rows != rows || m.cols != cols || m.data.size() != rows * cols) {
    throw ConfigError(what + ": expected " + std::to_string(rows) + "x" + std::to_string(cols) +
                      ", got " + std::to_string(m.rows) + "x" + std::to_string(m.cols));
  }
}

double unit_interval(std::uint64_t word) { return static_cast<double>(word >> 11) * 0x1.0p-53; }

class Uniform {
 public:
  Uniform(const SeededPrf& rng, std::uint32_t a) : rng_(rng), a_(a) {}
  // Uniform in [-scale, scale], rounded to the 2^-f grid.
  double grid(double scale, int f) {
    std::uint64_t w = 0;
    rng_.words({kModelStream, a_, 0, 0, 0}, next_++, &w, 1);
    const double x = (2.0 * unit_interval(w) - 1.0) * scale;
    return std::round(std::ldexp(x, f)) / std::ldexp(1.0, f);
  }

 private:
  const SeededPrf& rng_;
  std::uint32_t a_;
  std::uint64_t next_ = 0;
};

Matrix encode_real(const RealMatrix& m, const FixedPointCodec& codec) {
  Matrix out(m.rows, m.cols);
  for (std::size_t i = 0; i < m.data.size(); ++i) out.data()[i] = codec.encode(m.data[i]);
  return out;
}

}  // namespace

void PlainModel::validate() const {
  if (layers.size() != arch.layers.size()) {
    throw ConfigError("model: " + std::to_string(layers.size()) + " parameter slots for " +
                      std::to_string(arch.layers.size()) + " layers");
  }
  for (std::size_t i = 0; i < layers.size(); ++i) {
    const LayerSpec& spec = arch.layers[i];
    const PlainLayer& p = layers[i];
    const std::string where = "model layer " + std::to_string(i);
    if (spec.type == LayerType::kLinear) {
      check_shape(p.weight, spec.in, spec.out, where + " weight");
      check_shape(p.bias, 1, spec.out, where + " bias");
    } else if (spec.type == LayerType::kBatchNorm) {
      check_shape(p.gamma, 1, spec.in, where + " gamma");
      check_shape(p.beta, 1, spec.in, where + " beta");
      check_shape(p.mean, 1, spec.in, where + " mean");
      check_shape(p.var, 1, spec.in, where + " var");
      for (double v : p.var.data) {
        if (!(v + p.eps > 0.0)) throw ConfigError(where + ": Var + eps must be positive");
      }
    }
  }
}

AffineParams fold_batchnorm(const PlainLayer& bn) {
  AffineParams out;
  const std::size_t n = bn.gamma.data.size();
  out.a.resize(n);
  out.b.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double denom = bn.var.data[i] + bn.eps;
    if (!(denom > 0.0)) throw ConfigError("batch norm: Var + eps must be positive");
    out.a[i] = bn.gamma.data[i] / std::sqrt(denom);
    out.b[i] = bn.beta.data[i] - bn.mean.data[i] * out.a[i];
  }
  return out;
}

std::vector<ModelShare> split_model(const PlainModel& model, int parties, int fraction_bits,
                                    const Seed& seed, std::uint64_t version) {
  if (parties < 2) throw ConfigError("split_model: need at least 2 parties");
  model.validate();
  const FixedPointCodec codec(fraction_bits);
  const SeededPrf rng(seed);
  std::vector<ModelShare> out(parties);
  for (int p = 0; p < parties; ++p) {
    out[p].arch = model.arch;
    out[p].party = p;
    out[p].parties = parties;
    out[p].fraction_bits = fraction_bits;
    out[p].version = version;
    out[p].layers.resize(model.layers.size());
  }
  for (std::size_t i = 0; i < model.layers.size(); ++i) {
    const LayerType t = model.arch.layers[i].type;
    if (!is_param(t)) continue;
    Matrix w, b;
    if (t == LayerType::kLinear) {
      w = encode_real(model.layers[i].weight, codec);
      b = encode_real(model.layers[i].bias, codec);
    } else {
      const AffineParams ab = fold_batchnorm(model.layers[i]);
      w = Matrix(1, ab.a.size());
      b = Matrix(1, ab.b.size());
      for (std::size_t c = 0; c < ab.a.size(); ++c) {
        w.at(0, c) = codec.encode(ab.a[c]);
        b.at(0, c) = codec.encode(ab.b[c]);
      }
    }
    const auto layer = static_cast<std::uint32_t>(i);
    auto ws = split_additive(w, parties, rng, {kModelShareStream, layer, 0, 0, version});
    auto bs = split_additive(b, parties, rng, {kModelShareStream, layer, 1, 0, version});
    for (int p = 0; p < parties; ++p) {
      out[p].layers[i].weight = std::move(ws[p]);
      out[p].layers[i].bias = std::move(bs[p]);
    }
  }
  return out;
}

std::vector<SharedLayer> reconstruct_model(const std::vector<ModelShare>& shares) {
  if (shares.empty()) throw ConfigError("reconstruct_model: no shares");
  std::vector<SharedLayer> out(shares.front().layers.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::vector<Matrix> w, b;
    for (const auto& s : shares) {
      if (s.layers.size() != out.size()) throw ShapeError("reconstruct_model: layer count");
      w.push_back(s.layers[i].weight);
      b.push_back(s.layers[i].bias);
    }
    out[i].weight = reconstruct_additive(w);
    out[i].bias = reconstruct_additive(b);
  }
  return out;
}

Bytes serialize_plain_model(const PlainModel& m) {
  m.validate();
  ByteWriter w;
  w.raw({reinterpret_cast<const std::uint8_t*>(kPlainMagic), 8});
  w.str(m.arch.canonical());
  for (std::size_t i = 0; i < m.layers.size(); ++i) {
    const PlainLayer& p = m.layers[i];
    switch (m.arch.layers[i].type) {
      case LayerType::kLinear:
        write_real(w, p.weight);
        write_real(w, p.bias);
        break;
      case LayerType::kBatchNorm:
        write_real(w, p.gamma);
        write_real(w, p.beta);
        write_real(w, p.mean);
        write_real(w, p.var);
        w.f64(p.eps);
        break;
      default:
        break;
    }
  }
  return w.take();
}

PlainModel deserialize_plain_model(const Bytes& data) {
  ByteReader r(data);
  expect_magic(r, kPlainMagic, "plain model");
  PlainModel m;
  try {
    m.arch = Architecture::from_json(nlohmann::json::parse(r.str()));
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("plain model: ") + e.what());
  }
  m.layers.resize(m.arch.layers.size());
  for (std::size_t i = 0; i < m.layers.size(); ++i) {
    PlainLayer& p = m.layers[i];
    switch (m.arch.layers[i].type) {
      case LayerType::kLinear:
        p.weight = read_real(r);
        p.bias = read_real(r);
        break;
      case LayerType::kBatchNorm:
        p.gamma = read_real(r);
        p.beta = read_real(r);
        p.mean = read_real(r);
        p.var = read_real(r);
        p.eps = r.f64();
        break;
      default:
        break;
    }
  }
  if (!r.done()) throw ConfigError("plain model: trailing bytes");
  m.validate();
  return m;
}

void save_plain_model(const std::string& path, const PlainModel& m) {
  write_file(path, serialize_plain_model(m));
}

PlainModel load_plain_model(const std::string& path) {
  return deserialize_plain_model(read_file(path));
}

Bytes serialize_model_share(const ModelShare& m) {
  ByteWriter w;
  w.raw({reinterpret_cast<const std::uint8_t*>(kShareMagic), 8});
  w.u64(m.version);
  w.u32(static_cast<std::uint32_t>(m.party));
  w.u32(static_cast<std::uint32_t>(m.parties));
  w.u32(static_cast<std::uint32_t>(m.fraction_bits));
  w.str(m.arch.canonical());
  for (std::size_t i = 0; i < m.layers.size(); ++i) {
    if (!is_param(m.arch.layers[i].type)) continue;
    write_matrix(w, m.layers[i].weight);
    write_matrix(w, m.layers[i].bias);
  }
  return w.take();
}

ModelShare deserialize_model_share(const Bytes& data) {
  ByteReader r(data);
  expect_magic(r, kShareMagic, "model share");
  ModelShare m;
  m.version = r.u64();
  m.party = static_cast<int>(r.u32());
  m.parties = static_cast<int>(r.u32());
  m.fraction_bits = static_cast<int>(r.u32());
  if (m.parties < 2 || m.party >= m.parties) throw ConfigError("model share: bad party header");
  try {
    m.arch = Architecture::from_json(nlohmann::json::parse(r.str()));
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("model share: ") + e.what());
  }
  m.layers.resize(m.arch.layers.size());
  for (std::size_t i = 0; i < m.layers.size(); ++i) {
    const LayerSpec& spec = m.arch.layers[i];
    if (!is_param(spec.type)) continue;
    m.layers[i].weight = read_matrix(r);
    m.layers[i].bias = read_matrix(r);
    const std::size_t wr = spec.type == LayerType::kLinear ? spec.in : 1;
    if (m.layers[i].weight.rows() != wr || m.layers[i].weight.cols() != spec.out ||
        m.layers[i].bias.rows() != 1 || m.layers[i].bias.cols() != spec.out) {
      throw ConfigError("model share: layer " + std::to_string(i) + " has the wrong shape");
    }
  }
  if (!r.done()) throw ConfigError("model share: trailing bytes");
  return m;
}

void save_model_share(const std::string& path, const ModelShare& m) {
  write_file(path, serialize_model_share(m));
}

ModelShare load_model_share(const std::string& path) {
  return deserialize_model_share(read_file(path));
}

std::string model_share_filename(int party) {
  return "model.party" + std::to_string(party) + ".shm";
}

PlainModel random_model(const Architecture& arch_in, const SeededPrf& rng, int fraction_bits) {
  PlainModel m;
  m.arch = arch_in;
  m.arch.validate();
  m.layers.resize(m.arch.layers.size());
  for (std::size_t i = 0; i < m.layers.size(); ++i) {
    const LayerSpec& spec = m.arch.layers[i];
    PlainLayer& p = m.layers[i];
    Uniform u(rng, static_cast<std::uint32_t>(i));
    if (spec.type == LayerType::kLinear) {
      p.weight = RealMatrix(spec.in, spec.out);
      p.bias = RealMatrix(1, spec.out);
      const double s = 1.0 / std::sqrt(static_cast<double>(spec.in));
      for (auto& v : p.weight.data) v = u.grid(s, fraction_bits);
      for (auto& v : p.bias.data) v = u.grid(0.1, fraction_bits);
    } else if (spec.type == LayerType::kBatchNorm) {
      p.gamma = RealMatrix(1, spec.in);
      p.beta = RealMatrix(1, spec.in);
      p.mean = RealMatrix(1, spec.in);
      p.var = RealMatrix(1, spec.in);
      for (auto& v : p.gamma.data) v = 1.0;
      for (auto& v : p.var.data) v = 1.0 - p.eps;
    }
  }
  return m;
}

void calibrate_batchnorm(PlainModel& model, const std::vector<PlaintextGraph>& graphs,
                         const SeededPrf& rng, int fraction_bits) {
  for (std::size_t i = 0; i < model.layers.size(); ++i) {
    if (model.arch.layers[i].type != LayerType::kBatchNorm) continue;
    const std::size_t dim = model.arch.layers[i].in;
    std::vector<double> sum(dim, 0.0), sq(dim, 0.0);
    double count = 0;
    for (const auto& g : graphs) {
      plaintext_reference(g, model, [&](std::size_t layer, const RealMatrix& x) {
        if (layer != i) return;
        for (std::size_t r = 0; r < x.rows; ++r) {
          for (std::size_t c = 0; c < dim; ++c) {
            sum[c] += x.at(r, c);
            sq[c] += x.at(r, c) * x.at(r, c);
          }
        }
        count += static_cast<double>(x.rows);
      });
    }
    PlainLayer& p = model.layers[i];
    Uniform u(rng, 0x10000 + static_cast<std::uint32_t>(i));
    for (std::size_t c = 0; c < dim; ++c) {
      const double mean = count > 0 ? sum[c] / count : 0.0;
      const double var = count > 0 ? sq[c] / count - mean * mean : 1.0;
      p.mean.data[c] = mean;
      p.var.data[c] = std::max(var, kMinCalibratedVar);
      p.gamma.data[c] = 1.0 + u.grid(0.25, fraction_bits);
      p.beta.data[c] = u.grid(0.25, fraction_bits);
    }
  }
}

}  // namespace sgnn
