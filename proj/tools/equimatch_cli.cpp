// Copyright 2026 The Equimatch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "equimatch/equimatchable_sets.hpp"
#include "equimatch/gadgets.hpp"
#include "equimatch/gallai_edmonds.hpp"
#include "equimatch/graph.hpp"
#include "equimatch/matching.hpp"
#include "equimatch/matching_gap.hpp"
#include "equimatch/serialize.hpp"

namespace {

using equimatch::Graph;
using nlohmann::json;

// Exit codes: 0 computation completed (verdicts live in the output),
// 1 bad input or unmet precondition, 2 scale refusal.
constexpr int kOkExit = 0;
constexpr int kInputExit = 1;
constexpr int kScaleExit = 2;

struct ScaleRefusal : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Graph load_graph(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return equimatch::read_graph(buffer.str());
  }
  std::ifstream file(path);
  if (!file) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return equimatch::read_graph(buffer.str());
}

void emit(const json& doc, const std::string& format) {
  if (format == "json") {
    std::cout << doc.dump(2) << '\n';
    return;
  }
  for (const auto& [key, value] : doc.items()) {
    if (key == "schema" || key == "type") continue;
    std::cout << key << ": " << (value.is_string() ? value.get<std::string>()
                                                   : value.dump())
              << '\n';
  }
}

std::vector<int> parse_vertex_list(const std::string& text) {
  std::vector<int> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    if (token.empty()) continue;
    out.push_back(std::stoi(token));
  }
  return out;
}

int run_analyze(const std::string& input, int cap, const std::string& format) {
  const Graph g = load_graph(input);
  json doc = equimatch::make_document("analysis");
  doc["n"] = g.vertex_count();
  doc["m"] = g.edge_count();
  const auto metrics = equimatch::compute_matching_metrics(g, cap);
  doc["nu"] = metrics.nu;
  if (metrics.beta) {
    doc["beta"] = *metrics.beta;
    doc["mu"] = *metrics.mu;
  } else {
    doc["notice"] = "beta and mu omitted: graph exceeds --cap " +
                    std::to_string(cap);
  }
  doc["equimatchable"] = equimatch::is_equimatchable(g);
  const auto ged = equimatch::gallai_edmonds(g);
  doc["gallai_edmonds"] = equimatch::to_json(ged);
  emit(doc, format);
  return kOkExit;
}

int run_gap(const std::string& input, int k, const std::string& alg, int cap,
            const std::string& format) {
  const Graph g = load_graph(input);
  if (k < 0) throw std::runtime_error("--k must be non-negative");
  json doc = equimatch::make_document("gap-verdict");
  doc["k"] = k;
  doc["alg"] = alg;
  bool yes = false;
  if (alg == "brute") {
    if (g.vertex_count() > cap) {
      throw ScaleRefusal("brute decider enumerates maximal matchings; refuse n = " +
                         std::to_string(g.vertex_count()) + " > --cap " +
                         std::to_string(cap));
    }
    yes = equimatch::gap_at_least_brute(g, k);
  } else if (alg == "is-enum") {
    auto witness = equimatch::decide_gap_is_enum(g, k);
    yes = witness.has_value();
    if (witness) doc["witness"] = equimatch::to_json(g, *witness);
  } else if (alg == "alg1") {
    auto cert = equimatch::decide_gap_decomposition(g, k);
    yes = cert.has_value();
    if (cert) doc["certificate"] = equimatch::to_json(g, *cert);
  } else if (alg == "alg2") {
    auto cert = equimatch::decide_gap_exposure(g, k);
    yes = cert.has_value();
    if (cert) doc["certificate"] = equimatch::to_json(g, *cert);
  } else {
    throw std::runtime_error("unknown --alg '" + alg + "'");
  }
  doc["verdict"] = yes ? "YES" : "NO";
  emit(doc, format);
  return kOkExit;
}

bool looks_like_cycle(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 3 || g.edge_count() != n) return false;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) != 2) return false;
  std::vector<int> all(n);
  for (int v = 0; v < n; ++v) all[v] = v;
  return equimatch::components_within(g, all).size() == 1;
}

int run_eta(const std::string& input, const std::string& method, int cap,
            const std::string& format) {
  const Graph g = load_graph(input);
  json doc = equimatch::make_document("eta");
  doc["method"] = method;
  if (method == "xp" || method == "hitting-set") {
    if (g.vertex_count() > cap) {
      throw ScaleRefusal("method '" + method + "' enumerates matchings; refuse n = " +
                         std::to_string(g.vertex_count()) + " > --cap " +
                         std::to_string(cap));
    }
    const auto result = method == "xp" ? equimatch::eta_by_subset_search(g)
                                       : equimatch::eta_by_hitting_set(g);
    doc["eta"] = result.eta;
    doc["witness"] = result.witness;
  } else if (method == "shortcut") {
    const auto result = equimatch::eta_expandable_shortcut(g);
    doc["eta"] = result.eta;
    doc["witness"] = result.witness;
  } else if (method == "cycle") {
    if (!looks_like_cycle(g)) {
      throw std::runtime_error("method 'cycle' needs a cycle graph");
    }
    doc["eta"] = equimatch::eta_cycle_closed_form(g.vertex_count());
  } else {
    throw std::runtime_error("unknown --method '" + method + "'");
  }
  emit(doc, format);
  return kOkExit;
}

int run_eqset(const std::string& input, const std::string& set_text,
              const std::string& format) {
  const Graph g = load_graph(input);
  const auto report =
      equimatch::check_equimatchable_set(g, parse_vertex_list(set_text));
  emit(equimatch::to_json(g, report), format);
  return kOkExit;
}

int run_gen(const std::string& kind, const std::vector<std::string>& params,
            bool connected, const std::string& format) {
  auto int_param = [&](size_t i) {
    if (i >= params.size()) {
      throw std::runtime_error("generator '" + kind + "' needs more parameters");
    }
    return std::stoi(params[i]);
  };
  Graph g;
  if (kind == "prism") {
    g = equimatch::make_prism(int_param(0));
  } else if (kind == "kp4") {
    g = connected ? equimatch::make_kp4_connected(int_param(0))
                  : equimatch::make_kp4(int_param(0));
  } else if (kind == "gap2") {
    g = equimatch::gap_two_fixture();
  } else if (kind == "amplifier") {
    if (params.empty()) throw std::runtime_error("amplifier needs an input graph file");
    g = equimatch::make_gap_amplifier(load_graph(params[0]));
  } else if (kind == "subdivision-complement") {
    if (params.empty()) {
      throw std::runtime_error("subdivision-complement needs an input graph file");
    }
    g = equimatch::make_subdivision_complement(load_graph(params[0]));
  } else if (kind == "complete-bipartite") {
    g = equimatch::build_family(kind, {int_param(0), int_param(1)});
  } else {
    g = equimatch::build_family(kind, {int_param(0)});
  }
  if (format == "json") {
    std::cout << equimatch::to_json(g).dump(2) << '\n';
  } else {
    std::cout << equimatch::write_graph(g);
  }
  return kOkExit;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matching gap and equimatchability defect toolkit"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string format = "text";
  std::string alg = "alg2";
  std::string method = "hitting-set";
  std::string set_text;
  std::string kind;
  std::vector<std::string> gen_params;
  bool connected = false;
  int k = 0;
  int cap = 20;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("input", input, "edge-list file, or - for stdin");
    cmd->add_option("--output", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
  };

  auto* analyze = app.add_subcommand("analyze", "matching numbers and structure");
  add_common(analyze);
  analyze->add_option("--cap", cap, "vertex cap for exhaustive oracles");

  auto* gap = app.add_subcommand("gap", "decide whether the matching gap reaches k");
  add_common(gap);
  gap->add_option("--k", k, "threshold")->required();
  gap->add_option("--alg", alg, "brute, is-enum, alg1, or alg2")
      ->check(CLI::IsMember({"brute", "is-enum", "alg1", "alg2"}));
  gap->add_option("--cap", cap, "vertex cap for exhaustive oracles");

  auto* eta = app.add_subcommand("eta", "equimatchability defect");
  add_common(eta);
  eta->add_option("--method", method, "xp, hitting-set, shortcut, or cycle")
      ->check(CLI::IsMember({"xp", "hitting-set", "shortcut", "cycle"}));
  eta->add_option("--cap", cap, "vertex cap for exhaustive oracles");

  auto* eqset = app.add_subcommand("eqset", "classify a vertex set");
  add_common(eqset);
  eqset->add_option("--set", set_text, "comma-separated vertex ids")->required();

  auto* gen = app.add_subcommand("gen", "emit a generated graph");
  gen->add_option("kind", kind,
                  "path, cycle, complete, complete-bipartite, star, kk2, "
                  "prism, kp4, gap2, amplifier, subdivision-complement")
      ->required();
  gen->add_option("params", gen_params, "generator parameters");
  gen->add_flag("--connected", connected, "connected variant (kp4)");
  gen->add_option("--output", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) return run_analyze(input, cap, format);
    if (gap->parsed()) return run_gap(input, k, alg, cap, format);
    if (eta->parsed()) return run_eta(input, method, cap, format);
    if (eqset->parsed()) return run_eqset(input, set_text, format);
    if (gen->parsed()) return run_gen(kind, gen_params, connected, format);
  } catch (const ScaleRefusal& refusal) {
    std::cerr << "refused: " << refusal.what() << '\n';
    return kScaleExit;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << '\n';
    return kInputExit;
  }
  return kInputExit;
}
