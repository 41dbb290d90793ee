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

#include "sgnn/client/graph.h"

#include <cmath>
#include <fstream>
#include <sstream>

#include "sgnn/common/errors.h"

namespace sgnn {
namespace {
constexpr std::uint32_t kGraphStream = 0x600;

double unit_interval(std::uint64_t word) {
  return static_cast<double>(word >> 11) * 0x1.0p-53;
}
}  // namespace

void PlaintextGraph::validate() const {
  if (nodes == 0) throw ConfigError("graph: no nodes");
  if (features.size() != nodes * feature_dim) throw ConfigError("graph: feature count mismatch");
  if (src.size() != dst.size()) throw ConfigError("graph: src/dst length mismatch");
  if (!weights.empty() && weights.size() != src.size()) throw ConfigError("graph: weight count mismatch");
  for (double v : features) {
    if (!std::isfinite(v)) throw ConfigError("graph: non-finite feature");
  }
  for (double v : weights) {
    if (!std::isfinite(v)) throw ConfigError("graph: non-finite weight");
  }
  for (std::size_t e = 0; e < src.size(); ++e) {
    if (src[e] >= nodes || dst[e] >= nodes) {
      throw ConfigError("graph: edge " + std::to_string(e) + " (" + std::to_string(src[e]) +
                        " -> " + std::to_string(dst[e]) + ") out of range for N=" +
                        std::to_string(nodes));
    }
  }
}

PlaintextGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string header;
  if (!std::getline(in, header)) throw ConfigError("graph: empty file");
  std::istringstream hs(header);
  long long n = -1, k = -1, m = -1;
  if (!(hs >> n >> k >> m) || n <= 0 || k < 0 || m < 0) {
    throw ConfigError("graph: bad header '" + header + "'");
  }
  bool directed = true, weighted = false;
  for (std::string word; hs >> word;) {
    if (word == "directed") directed = true;
    else if (word == "undirected") directed = false;
    else if (word == "weighted") weighted = true;
    else throw ConfigError("graph: unknown header flag '" + word + "'");
  }
  PlaintextGraph g;
  g.nodes = static_cast<std::uint64_t>(n);
  g.feature_dim = static_cast<std::uint64_t>(k);
  g.features.resize(g.nodes * g.feature_dim);
  for (auto& v : g.features) {
    std::string tok;
    if (!(in >> tok)) throw ConfigError("graph: truncated feature block");
    try {
      v = std::stod(tok);
    } catch (const std::exception&) {
      throw ConfigError("graph: bad feature value '" + tok + "'");
    }
  }
  for (long long e = 0; e < m; ++e) {
    long long s = -1, d = -1;
    if (!(in >> s >> d)) throw ConfigError("graph: truncated edge list");
    if (s < 0 || d < 0 || s >= n || d >= n) {
      throw ConfigError("graph: edge " + std::to_string(e) + " index out of range");
    }
    double w = 1.0;
    if (weighted && !(in >> w)) throw ConfigError("graph: missing edge weight");
    g.src.push_back(static_cast<std::uint32_t>(s));
    g.dst.push_back(static_cast<std::uint32_t>(d));
    if (weighted) g.weights.push_back(w);
    if (!directed && s != d) {
      g.src.push_back(static_cast<std::uint32_t>(d));
      g.dst.push_back(static_cast<std::uint32_t>(s));
      if (weighted) g.weights.push_back(w);
    }
  }
  g.validate();
  return g;
}

PlaintextGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open graph file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_graph(ss.str());
}

std::string format_graph(const PlaintextGraph& g) {
  std::ostringstream out;
  out.precision(17);
  out << g.nodes << ' ' << g.feature_dim << ' ' << g.edges() << " directed"
      << (g.weighted() ? " weighted" : "") << '\n';
  for (std::uint64_t i = 0; i < g.nodes; ++i) {
    for (std::uint64_t k = 0; k < g.feature_dim; ++k) {
      out << (k ? " " : "") << g.feature(i, k);
    }
    out << '\n';
  }
  for (std::uint64_t e = 0; e < g.edges(); ++e) {
    out << g.src[e] << ' ' << g.dst[e];
    if (g.weighted()) out << ' ' << g.weights[e];
    out << '\n';
  }
  return out.str();
}

void add_self_loops(PlaintextGraph& g) {
  for (std::uint64_t i = 0; i < g.nodes; ++i) {
    g.src.push_back(static_cast<std::uint32_t>(i));
    g.dst.push_back(static_cast<std::uint32_t>(i));
    if (g.weighted()) g.weights.push_back(1.0);
  }
}

void pad_fake_edges(PlaintextGraph& g, std::uint64_t target_edges, const SeededPrf& rng) {
  if (!g.weighted()) g.weights.assign(g.edges(), 1.0);
  std::uint64_t i = 0;
  while (g.edges() < target_edges) {
    g.src.push_back(static_cast<std::uint32_t>(rng.below({kGraphStream, 1, 0, 0, i}, g.nodes)));
    g.dst.push_back(static_cast<std::uint32_t>(rng.below({kGraphStream, 2, 0, 0, i}, g.nodes)));
    g.weights.push_back(0.0);
    ++i;
  }
}

PlaintextGraph random_graph(std::uint64_t nodes, std::uint64_t feature_dim, std::uint64_t edges,
                            const SeededPrf& rng, double feature_scale) {
  PlaintextGraph g;
  g.nodes = nodes;
  g.feature_dim = feature_dim;
  std::vector<std::uint64_t> words(nodes * feature_dim);
  rng.words({kGraphStream, 3, 0, 0, 0}, 0, words.data(), words.size());
  g.features.resize(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    g.features[i] = (2.0 * unit_interval(words[i]) - 1.0) * feature_scale;
  }
  std::vector<std::uint64_t> ends(2 * edges);
  rng.words({kGraphStream, 4, 0, 0, 0}, 0, ends.data(), ends.size());
  for (std::uint64_t e = 0; e < edges; ++e) {
    // Modulo bias is irrelevant for synthetic structure.
    g.src.push_back(static_cast<std::uint32_t>(ends[2 * e] % nodes));
    g.dst.push_back(static_cast<std::uint32_t>(ends[2 * e + 1] % nodes));
  }
  return g;
}

}  // namespace sgnn
