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

// sgnn: command-line driver for model splitting, offline preprocessing,
// secure inference, verification against the plaintext engine, benchmarks
// and cost reports.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sgnn/common/errors.h"
#include "sgnn/model/gin.h"
#include "sgnn/model/plaintext.h"
#include "sgnn/provider/offline_store.h"
#include "sgnn/runtime/pipeline.h"

namespace fs = std::filesystem;
using nlohmann::json;

namespace sgnn {
namespace {

constexpr int kExitConfig = 2;
constexpr int kExitProtocol = 3;
constexpr int kExitVerify = 4;

class VerificationFailed : public Error {
 public:
  using Error::Error;
};

struct Common {
  int parties = 3;
  std::uint64_t batches = 20;
  int fraction_bits = 16;
  std::string backend = "loopback";
  std::uint64_t seed = 1;
  std::string out;
  std::vector<std::string> peers;
};

void add_common(CLI::App* app, Common& c, bool with_out = true) {
  app->add_option("--parties", c.parties, "Number of computing parties")
      ->envname("CRYPTGNN_PARTIES")
      ->check(CLI::Range(2, 64));
  app->add_option("--batches", c.batches, "Edge batches R (capped at the edge count)")
      ->envname("CRYPTGNN_BATCHES")
      ->check(CLI::PositiveNumber);
  app->add_option("--fraction-bits", c.fraction_bits, "Fixed-point fraction bits f")
      ->envname("CRYPTGNN_FRACTION_BITS")
      ->check(CLI::Range(0, 28));
  app->add_option("--backend", c.backend, "loopback or socket")
      ->envname("CRYPTGNN_BACKEND")
      ->check(CLI::IsMember({"loopback", "socket"}));
  app->add_option("--seed", c.seed, "Master seed")->envname("CRYPTGNN_SEED");
  app->add_option("--peers", c.peers, "host:port per party (socket backend)")
      ->envname("CRYPTGNN_PEERS")
      ->delimiter(',');
  if (with_out) app->add_option("--out", c.out, "Output path")->envname("CRYPTGNN_OUT");
}

Seed seed_of(std::uint64_t seed, const char* label) {
  return derive_seed(SeededPrf::from_u64(seed).seed(), label, 0);
}

std::vector<ModelShare> load_shares(const std::string& dir, int parties) {
  std::vector<ModelShare> out;
  for (int p = 0; p < parties; ++p) {
    const fs::path path = fs::path(dir) / model_share_filename(p);
    if (!fs::exists(path)) throw ConfigError("missing model share " + path.string());
    out.push_back(load_model_share(path.string()));
    if (out.back().parties != parties) {
      throw ConfigError(path.string() + " was split for " + std::to_string(out.back().parties) +
                        " parties");
    }
  }
  return out;
}

std::vector<PartyOffline> load_offline_dir(const std::string& dir, std::uint32_t client,
                                           int parties) {
  std::vector<PartyOffline> out;
  for (int p = 0; p < parties; ++p) {
    const fs::path path = fs::path(dir) / offline_filename(client, p);
    if (!fs::exists(path)) throw ConfigError("missing offline material " + path.string());
    out.push_back(load_offline(path.string()));
  }
  return out;
}

void save_offline_dir(const std::string& dir, const std::vector<PartyOffline>& off) {
  fs::create_directories(dir);
  for (const auto& o : off) {
    save_offline((fs::path(dir) / offline_filename(o.client_id, o.party)).string(), o);
  }
}

json phase_json(const InferenceReport& rep) {
  json phases = json::object();
  const Transcript& t0 = rep.transcripts.front();
  for (const auto& [name, st] : t0.phases()) {
    phases[name] = {{"rounds", st.rounds}, {"bytes_sent", st.bytes_sent},
                    {"bytes_received", st.bytes_received}};
  }
  for (const auto& pt : rep.timings.front()) {
    if (phases.contains(pt.phase)) phases[pt.phase]["wall_ms"] = pt.wall_ms;
  }
  return phases;
}

json report_json(const InferenceReport& rep, int parties, const std::string& backend) {
  json j;
  j["session"] = session_hex(rep.session);
  j["backend"] = backend;
  j["parties"] = parties;
  j["nodes"] = rep.nodes;
  j["edges"] = rep.edges;
  j["batches"] = rep.batches;
  j["class"] = rep.result.argmax;
  j["logits"] = rep.result.logits;
  j["probabilities"] = rep.result.probabilities;
  j["client_ms"] = rep.client_ms;
  j["online_ms"] = rep.online_ms;
  j["expected_rounds"] = rep.expected_rounds;
  json per = json::array();
  for (const auto& t : rep.transcripts) {
    per.push_back({{"rounds", t.rounds()},
                   {"bytes_sent", t.total_sent()},
                   {"bytes_received", t.total_received()},
                   {"digest", t.digest_hex()}});
  }
  j["party_transcripts"] = per;
  j["phases"] = phase_json(rep);
  return j;
}

void print_report(const InferenceReport& rep) {
  std::printf("class %zu  (p = %.4f)\n", rep.result.argmax,
              rep.result.probabilities.empty() ? 0.0 : rep.result.probabilities[rep.result.argmax]);
  std::printf("logits:");
  for (double v : rep.result.logits) std::printf(" %.6f", v);
  std::printf("\nclient prep %.1f ms, online %.1f ms\n", rep.client_ms, rep.online_ms);
  const Transcript& t0 = rep.transcripts.front();
  std::printf("%-14s %8s %14s %10s\n", "phase", "rounds", "bytes_sent", "wall_ms");
  for (const auto& pt : rep.timings.front()) {
    auto it = t0.phases().find(pt.phase);
    const std::uint64_t rounds = it == t0.phases().end() ? 0 : it->second.rounds;
    const std::uint64_t bytes = it == t0.phases().end() ? 0 : it->second.bytes_sent;
    std::printf("%-14s %8llu %14llu %10.2f\n", pt.phase.c_str(),
                static_cast<unsigned long long>(rounds), static_cast<unsigned long long>(bytes),
                pt.wall_ms);
  }
  for (std::size_t p = 0; p < rep.transcripts.size(); ++p) {
    const Transcript& t = rep.transcripts[p];
    std::printf("party %zu: %llu rounds (expected %llu), %llu bytes sent, %llu received\n", p,
                static_cast<unsigned long long>(t.rounds()),
                static_cast<unsigned long long>(rep.expected_rounds),
                static_cast<unsigned long long>(t.total_sent()),
                static_cast<unsigned long long>(t.total_received()));
  }
}

InferenceOptions inference_options(const Common& c, std::uint64_t nonce) {
  InferenceOptions o;
  o.parties = c.parties;
  o.batches = c.batches;
  o.fraction_bits = c.fraction_bits;
  o.client_master = seed_of(c.seed, "client");
  o.request_nonce = nonce;
  o.backend = parse_backend(c.backend);
  o.addresses = c.peers;
  return o;
}

// --- split-model -----------------------------------------------------------

struct SplitArgs {
  Common c;
  std::string model;
  std::uint64_t version = 1;
};

int cmd_split(const SplitArgs& a) {
  if (a.c.out.empty()) throw ConfigError("split-model needs --out <dir>");
  const PlainModel m = load_plain_model(a.model);
  const auto shares =
      split_model(m, a.c.parties, a.c.fraction_bits, seed_of(a.c.seed, "model-split"), a.version);
  fs::create_directories(a.c.out);
  for (const auto& s : shares) {
    save_model_share((fs::path(a.c.out) / model_share_filename(s.party)).string(), s);
  }
  std::printf("wrote %d share files for '%s' to %s\n", a.c.parties, m.arch.name.c_str(),
              a.c.out.c_str());
  return 0;
}

// --- offline ----------------------------------------------------------------

struct OfflineArgs {
  Common c;
  std::string model_dir;
  std::uint32_t client = 0;
  std::uint64_t n_max = 0;
  std::uint64_t max_edges = 0;
  std::uint64_t inferences = 1;
};

int cmd_offline(const OfflineArgs& a) {
  if (a.c.out.empty()) throw ConfigError("offline needs --out <dir>");
  const auto shares = load_shares(a.model_dir, a.c.parties);
  OfflineOptions o;
  o.client_id = a.client;
  o.parties = a.c.parties;
  o.fraction_bits = shares.front().fraction_bits;
  o.n_max = a.n_max;
  o.max_edges = a.max_edges;
  o.inferences = a.inferences;
  o.master = seed_of(a.c.seed, "provider");
  o.backend = parse_backend(a.c.backend);
  const auto start = std::chrono::steady_clock::now();
  const auto off = run_offline(shares.front().arch, o);
  save_offline_dir(a.c.out, off);
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  const PartyOffline& p0 = off.front();
  std::printf("client %u: %zu matrix triples, %zu AM pairs, %zu truncation pairs, %zu compare "
              "bundles per party (%.1f ms)\n",
              a.client, p0.matrix_triples.size(), p0.am.size(), p0.truncation.size(),
              p0.compare.size(), ms);
  return 0;
}

// --- infer / verify ---------------------------------------------------------

struct InferArgs {
  Common c;
  std::string model_dir;
  std::string offline_dir;
  std::string graph;
  std::string plain_model;
  std::uint32_t client = 0;
  std::uint64_t nonce = 0;
  std::uint64_t pad_edges = 0;
  double tolerance = 1e-3;
};

InferenceReport infer_once(const InferArgs& a) {
  const auto shares = load_shares(a.model_dir, a.c.parties);
  auto states = make_party_states(shares, load_offline_dir(a.offline_dir, a.client, a.c.parties));
  const PlaintextGraph g = load_graph(a.graph);
  InferenceOptions o = inference_options(a.c, a.nonce);
  o.fraction_bits = shares.front().fraction_bits;
  o.pad_edges_to = a.pad_edges;
  InferenceReport rep = run_inference(g, states, o);
  // Persist advanced cursors so the next run never reuses pool entries.
  std::vector<PartyOffline> off;
  for (auto& s : states) off.push_back(std::move(s.offline));
  save_offline_dir(a.offline_dir, off);
  return rep;
}

int cmd_infer(const InferArgs& a) {
  const InferenceReport rep = infer_once(a);
  print_report(rep);
  if (!a.c.out.empty()) {
    std::ofstream(a.c.out) << report_json(rep, a.c.parties, a.c.backend).dump(2) << "\n";
  }
  return 0;
}

int cmd_verify(const InferArgs& a) {
  if (a.plain_model.empty()) throw ConfigError("verify needs --plain-model");
  const InferenceReport rep = infer_once(a);
  const PlainModel m = load_plain_model(a.plain_model);
  const RealMatrix ref = plaintext_reference(load_graph(a.graph), m);
  if (ref.rows != rep.logits.rows || ref.cols != rep.logits.cols) {
    throw ConfigError("plaintext and secure outputs differ in shape");
  }
  double max_diff = 0, sum = 0;
  for (std::size_t i = 0; i < ref.data.size(); ++i) {
    const double d = std::abs(ref.data[i] - rep.logits.data[i]);
    max_diff = std::max(max_diff, d);
    sum += d;
  }
  const double mean = ref.data.empty() ? 0.0 : sum / static_cast<double>(ref.data.size());
  print_report(rep);
  std::printf("secure vs plaintext: max |diff| = %.3g, mean |diff| = %.3g (tolerance %.3g)\n",
              max_diff, mean, a.tolerance);
  if (!a.c.out.empty()) {
    json j = report_json(rep, a.c.parties, a.c.backend);
    j["max_abs_diff"] = max_diff;
    j["mean_abs_diff"] = mean;
    std::ofstream(a.c.out) << j.dump(2) << "\n";
  }
  if (max_diff > a.tolerance) throw VerificationFailed("secure output outside tolerance");
  return 0;
}

// --- bench ------------------------------------------------------------------

struct BenchArgs {
  Common c;
  std::string sweep = "R";
  std::vector<double> values;
  std::uint64_t nodes = 500;
  std::uint64_t cols = 4;
  std::uint64_t edges = 2500;
  std::string model = "mpl";
  int repeat = 1;
};

// Header of the bench CSV; one row per run.
constexpr const char* kBenchHeader =
    "sweep,value,N,K,M,P,R,client_ms,online_ms,mpl_ms,rounds,bytes_per_party,analytic_bytes";

int cmd_bench(const BenchArgs& a) {
  std::ostringstream csv;
  csv << kBenchHeader << "\n";
  std::vector<double> values = a.values;
  if (values.empty()) values = {static_cast<double>(a.edges), a.edges / 5.0, a.edges / 20.0};
  for (double v : values) {
    std::uint64_t n = a.nodes, k = a.cols, m = a.edges, r = a.c.batches;
    int p = a.c.parties;
    const auto iv = static_cast<std::uint64_t>(std::llround(v));
    if (a.sweep == "R") r = iv;
    else if (a.sweep == "N") n = iv;
    else if (a.sweep == "K") k = iv;
    else if (a.sweep == "D") m = static_cast<std::uint64_t>(std::llround(v * static_cast<double>(n)));
    else if (a.sweep == "P") p = static_cast<int>(iv);
    else throw ConfigError("unknown sweep '" + a.sweep + "' (R, N, K, D or P)");
    r = std::max<std::uint64_t>(1, std::min(r, std::max<std::uint64_t>(m, 1)));

    const SeededPrf rng = SeededPrf::from_u64(a.c.seed);
    const PlaintextGraph g = random_graph(n, k, m, rng);
    PlainModel model;
    if (a.model == "gin") {
      model = make_gin_model({k, 16, 4, 3}, rng, {g}, a.c.fraction_bits);
    } else if (a.model == "mpl") {
      model.arch.name = "mpl";
      model.arch.input_dim = k;
      model.arch.layers.push_back({LayerType::kMpl});
      model.arch.validate();
      model.layers.resize(1);
    } else {
      throw ConfigError("bench model must be mpl or gin");
    }
    const auto shares = split_model(model, p, a.c.fraction_bits, seed_of(a.c.seed, "bench"));
    OfflineOptions oo;
    oo.parties = p;
    oo.fraction_bits = a.c.fraction_bits;
    oo.n_max = n;
    oo.max_edges = m;
    oo.inferences = static_cast<std::uint64_t>(a.repeat);
    oo.master = seed_of(a.c.seed, "provider");
    auto states = make_party_states(shares, run_offline(model.arch, oo));
    for (int rep_i = 0; rep_i < a.repeat; ++rep_i) {
      Common c = a.c;
      c.parties = p;
      c.batches = r;
      InferenceOptions o = inference_options(c, static_cast<std::uint64_t>(rep_i));
      const InferenceReport rep = run_inference(g, states, o);
      double mpl_ms = 0;
      for (const auto& t : rep.timings.front()) {
        if (t.phase.rfind("mpl", 0) == 0) mpl_ms += t.wall_ms;
      }
      csv << a.sweep << "," << v << "," << rep.nodes << "," << k << "," << rep.edges << "," << p
          << "," << rep.batches << "," << rep.client_ms << "," << rep.online_ms << "," << mpl_ms
          << "," << rep.transcripts.front().rounds() << ","
          << rep.transcripts.front().total_sent() << ","
          << analytic_mpl_bytes(rep.nodes, k, rep.batches, rep.edges, p) *
                 model.arch.count(LayerType::kMpl)
          << "\n";
    }
  }
  if (a.c.out.empty()) {
    std::cout << csv.str();
  } else {
    std::ofstream(a.c.out) << csv.str();
    std::printf("wrote %s\n", a.c.out.c_str());
  }
  return 0;
}

// --- report -----------------------------------------------------------------

struct ReportArgs {
  Common c;
  std::string model_dir;
  std::string run;
  std::uint64_t nodes = 0;
  std::uint64_t edges = 0;
};

int cmd_report(const ReportArgs& a) {
  if (!a.run.empty()) {
    std::ifstream in(a.run);
    if (!in) throw ConfigError("cannot open " + a.run);
    const json j = json::parse(in, nullptr, false);
    if (j.is_discarded()) throw ConfigError(a.run + " is not JSON");
    std::uint64_t phase_bytes = 0;
    for (const auto& [name, st] : j.at("phases").items()) {
      phase_bytes += st.at("bytes_sent").get<std::uint64_t>();
    }
    const std::uint64_t total = j.at("party_transcripts").at(0).at("bytes_sent");
    std::printf("run %s: class %d, party 0 sent %llu bytes, per-phase sum %llu (%s)\n",
                j.at("session").get<std::string>().c_str(), j.at("class").get<int>(),
                static_cast<unsigned long long>(total),
                static_cast<unsigned long long>(phase_bytes),
                total == phase_bytes ? "reconciled" : "MISMATCH");
    if (total != phase_bytes) throw VerificationFailed("phase bytes do not add up");
    return 0;
  }
  if (a.model_dir.empty()) throw ConfigError("report needs --run or --model-dir");
  const ModelShare s = load_shares(a.model_dir, a.c.parties).front();
  const Architecture& arch = s.arch;
  const std::uint64_t n = a.nodes;
  const std::uint64_t m = a.edges + (arch.self_loops ? n : 0);
  const std::uint64_t r = std::max<std::uint64_t>(1, std::min(a.c.batches, std::max<std::uint64_t>(m, 1)));
  const ResourceCount rc = count_resources(arch, n, m);
  std::printf("model '%s': %zu layers, input %zu, output %zu\n", arch.name.c_str(),
              arch.layers.size(), arch.input_dim, arch.output_dim());
  std::printf("graph N=%llu M=%llu (after self-loops), R=%llu, P=%d\n",
              static_cast<unsigned long long>(n), static_cast<unsigned long long>(m),
              static_cast<unsigned long long>(r), a.c.parties);
  std::printf("expected rounds: %llu\n",
              static_cast<unsigned long long>(expected_rounds(arch, a.c.parties, n, m)));
  std::printf("element-wise mults %llu (AM pairs %llu), truncations %llu, comparisons %llu\n",
              static_cast<unsigned long long>(rc.elem_mul),
              static_cast<unsigned long long>(rc.am_pairs()),
              static_cast<unsigned long long>(rc.truncations),
              static_cast<unsigned long long>(rc.compares));
  for (std::size_t k : arch.mpl_dims()) {
    std::printf("message passing K=%zu: %llu bytes per party (analytic)\n", k,
                static_cast<unsigned long long>(analytic_mpl_bytes(n, k, r, m, a.c.parties)));
  }
  return 0;
}

// --- helpers for producing inputs -------------------------------------------

struct GenArgs {
  Common c;
  std::uint64_t nodes = 8;
  std::uint64_t cols = 4;
  std::uint64_t edges = 16;
  std::size_t hidden = 16;
  std::size_t classes = 4;
};

int cmd_random_graph(const GenArgs& a) {
  if (a.c.out.empty()) throw ConfigError("random-graph needs --out");
  const PlaintextGraph g = random_graph(a.nodes, a.cols, a.edges, SeededPrf::from_u64(a.c.seed));
  std::ofstream(a.c.out) << format_graph(g);
  return 0;
}

int cmd_random_gin(const GenArgs& a) {
  if (a.c.out.empty()) throw ConfigError("random-gin needs --out");
  const SeededPrf rng = SeededPrf::from_u64(a.c.seed);
  std::vector<PlaintextGraph> calib;
  for (std::uint64_t i = 0; i < 4; ++i) {
    calib.push_back(random_graph(a.nodes, a.cols, a.edges,
                                 SeededPrf(derive_seed(rng.seed(), "calibration", i))));
  }
  save_plain_model(a.c.out,
                   make_gin_model({a.cols, a.hidden, a.classes, 3}, rng, calib, a.c.fraction_bits));
  return 0;
}

int run(int argc, char** argv) {
  CLI::App app{"sgnn: secret-shared graph neural network inference"};
  app.require_subcommand(1);

  SplitArgs split;
  auto* s = app.add_subcommand("split-model", "Split a plaintext model into P share files");
  add_common(s, split.c);
  s->add_option("--model", split.model, "Plaintext model file")->required();
  s->add_option("--version", split.version, "Model version (invalidates cached V)");

  OfflineArgs off;
  auto* o = app.add_subcommand("offline", "Generate a client's correlated randomness");
  add_common(o, off.c);
  o->add_option("--model-dir", off.model_dir, "Directory with model share files")->required();
  o->add_option("--client", off.client, "Client id");
  o->add_option("--n-max", off.n_max, "Largest node count")->required();
  o->add_option("--max-edges", off.max_edges, "Largest edge count")->required();
  o->add_option("--inferences", off.inferences, "Inferences to provision for");

  InferArgs inf;
  auto* add_infer = +[](CLI::App* cmd, InferArgs& x) {
    add_common(cmd, x.c);
    cmd->add_option("--model-dir", x.model_dir, "Directory with model share files")->required();
    cmd->add_option("--offline-dir", x.offline_dir, "Directory with offline material")
        ->required();
    cmd->add_option("--graph", x.graph, "Graph file")->required();
    cmd->add_option("--client", x.client, "Client id");
    cmd->add_option("--nonce", x.nonce, "Request nonce (fresh per inference)");
    cmd->add_option("--pad-edges", x.pad_edges, "Pad with zero-weight edges up to this count");
  };
  auto* i = app.add_subcommand("infer", "Run one secure inference");
  add_infer(i, inf);
  InferArgs ver;
  auto* v = app.add_subcommand("verify", "Secure inference checked against the plaintext engine");
  add_infer(v, ver);
  v->add_option("--plain-model", ver.plain_model, "Plaintext model file")->required();
  v->add_option("--tolerance", ver.tolerance, "Max absolute logit difference");

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "Sweep one parameter and emit CSV");
  add_common(b, bench.c);
  b->add_option("--sweep", bench.sweep, "R, N, K, D (average degree) or P");
  b->add_option("--values", bench.values, "Sweep values")->delimiter(',');
  b->add_option("--nodes", bench.nodes, "Base N");
  b->add_option("--features", bench.cols, "Base K");
  b->add_option("--edges", bench.edges, "Base M");
  b->add_option("--model", bench.model, "mpl (one message-passing layer) or gin");
  b->add_option("--repeat", bench.repeat, "Runs per point")->check(CLI::PositiveNumber);

  ReportArgs rep;
  auto* r = app.add_subcommand("report", "Analytic costs of a model, or reconcile a run report");
  add_common(r, rep.c, false);
  r->add_option("--model-dir", rep.model_dir, "Directory with model share files");
  r->add_option("--run", rep.run, "JSON written by infer --out");
  r->add_option("--nodes", rep.nodes, "N");
  r->add_option("--edges", rep.edges, "M");

  GenArgs gg, gm;
  auto* rg = app.add_subcommand("random-graph", "Write a random graph file");
  add_common(rg, gg.c);
  rg->add_option("--nodes", gg.nodes);
  rg->add_option("--features", gg.cols);
  rg->add_option("--edges", gg.edges);
  auto* rm = app.add_subcommand("random-gin", "Write a randomly initialized GIN model file");
  add_common(rm, gm.c);
  rm->add_option("--nodes", gm.nodes, "Calibration graph size");
  rm->add_option("--features", gm.cols);
  rm->add_option("--edges", gm.edges, "Calibration graph edges");
  rm->add_option("--hidden", gm.hidden);
  rm->add_option("--classes", gm.classes);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitConfig;
  }

  if (*s) return cmd_split(split);
  if (*o) return cmd_offline(off);
  if (*i) return cmd_infer(inf);
  if (*v) return cmd_verify(ver);
  if (*b) return cmd_bench(bench);
  if (*r) return cmd_report(rep);
  if (*rg) return cmd_random_graph(gg);
  if (*rm) return cmd_random_gin(gm);
  return kExitConfig;
}

}  // namespace
}  // namespace sgnn

int main(int argc, char** argv) {
  try {
    return sgnn::run(argc, argv);
  } catch (const sgnn::VerificationFailed& e) {
    std::fprintf(stderr, "verification failed: %s\n", e.what());
    return sgnn::kExitVerify;
  } catch (const sgnn::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return sgnn::kExitConfig;
  } catch (const sgnn::ProtocolError& e) {
    std::fprintf(stderr, "protocol abort: %s\n", e.what());
    return sgnn::kExitProtocol;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return sgnn::kExitProtocol;
  }
}
