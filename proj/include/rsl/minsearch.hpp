// Copyright 2026 The RSL Workbench Authors
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

// Inclusion-minimal density-critical subgraphs and the desk-scale run of the
// "exclude finitely many graphs, build a dense high-girth graph, take a minimal
// non-linear subgraph" argument.
//
// A graph H is a candidate when e(H) >= 2v(H) - 2 (v >= 3) and no proper
// subgraph satisfies the same inequality. Candidates are connected, have
// exactly 2v - 2 edges and minimum degree >= 3; equivalently they are the
// circuits of the (2,3)-sparsity matroid.

#ifndef RSL_MINSEARCH_HPP_
#define RSL_MINSEARCH_HPP_

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include <nlohmann/json.hpp>

#include "rsl/canonical.hpp"
#include "rsl/certify.hpp"
#include "rsl/construct.hpp"
#include "rsl/density.hpp"
#include "rsl/embedding.hpp"
#include "rsl/graph.hpp"
#include "rsl/graph6.hpp"

namespace rsl {

inline constexpr const char* kCandidateCaveat =
    "Candidates are inclusion-minimal subgraphs with e >= 2v-2. Each is not "
    "Ramsey size-linear, so each contains a minimally non-size-linear subgraph, "
    "which may be a proper subgraph. No candidate is claimed to be minimally "
    "non-Ramsey size-linear.";

inline bool is_density_critical(const Graph& g) {
  return g.order() >= 3 && g.size() + 2 >= 2 * g.order();
}

// e = 2v - 2 and deleting any edge leaves a (2,3)-sparse graph.
inline bool is_minimal_density_critical(const Graph& g) {
  if (g.order() < 3 || g.size() + 2 != 2 * g.order()) return false;
  if (has_isolated_vertex(g)) return false;
  const auto edges = g.edges();
  for (std::size_t skip = 0; skip < edges.size(); ++skip) {
    std::vector<Edge> rest;
    rest.reserve(edges.size() - 1);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (i != skip) rest.push_back(edges[i]);
    }
    if (!is_sparse_edge_set(g.order(), rest)) return false;
  }
  return true;
}

struct SearchLimits {
  std::size_t max_order = 16;
  std::size_t max_states = 5'000'000;
  double max_seconds = 120.0;
  // Used only when the source is above max_order.
  std::size_t max_circuits = 64;
};

struct Candidate {
  Graph graph;
  CanonicalCode code;
  Embedding embedding;  // into the source
  DensityCertificate certificate;
};

struct CandidateReport {
  Graph source;
  std::vector<Candidate> candidates;
  // "deletion-search" (complete unless the budget lapsed) or
  // "fundamental-circuits" (a sample, never complete).
  std::string method;
  bool complete = true;
  std::size_t states_explored = 0;
  std::size_t oversized = 0;  // circuits dropped for exceeding the graph6 order limit
  double wall_seconds = 0;
};

namespace detail {

class CandidateSearch {
 public:
  CandidateSearch(const Graph& source, const SearchLimits& limits)
      : source_(source), limits_(limits), start_(std::chrono::steady_clock::now()) {}

  CandidateReport run() {
    CandidateReport report;
    report.source = source_;
    report.method = "deletion-search";
    std::vector<Vertex> all(source_.order());
    for (Vertex v = 0; v < source_.order(); ++v) all[v] = v;
    visit(induced_subgraph(source_, all));
    report.complete = !exhausted_;
    report.states_explored = states_;
    for (auto& [code, cand] : found_) report.candidates.push_back(std::move(cand));
    report.wall_seconds = elapsed();
    return report;
  }

 private:
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

  static Subgraph compose(const Subgraph& outer, Subgraph inner) {
    for (auto& v : inner.origin) v = outer.origin[v];
    return inner;
  }

  void visit(const Subgraph& state) {
    if (exhausted_) return;
    Subgraph core = compose(state, k_core(state.graph, 3));
    if (core.graph.order() < 3) return;
    CanonicalCode code = canonical_code(core.graph, kGraph6MaxOrder);
    if (!seen_.insert(code).second) return;
    if (++states_ > limits_.max_states || (states_ % 256 == 0 && elapsed() > limits_.max_seconds)) {
      exhausted_ = true;
      return;
    }
    if (!has_dense_subgraph(core.graph)) return;
    if (is_minimal_density_critical(core.graph)) {
      Candidate c;
      c.certificate = certificate_for(core.graph, core.origin);
      c.graph = core.graph;
      c.embedding = core.origin;
      c.code = code;
      found_.emplace(std::move(code), std::move(c));
      return;
    }
    for (const Edge& e : core.graph.edges()) {
      Subgraph child = core;
      child.graph.remove_edge(e.u, e.v);
      visit(child);
    }
    for (Vertex v = 0; v < core.graph.order(); ++v) {
      std::vector<Vertex> keep;
      for (Vertex w = 0; w < core.graph.order(); ++w) {
        if (w != v) keep.push_back(w);
      }
      visit(compose(core, induced_subgraph(core.graph, keep)));
    }
  }

  const Graph& source_;
  SearchLimits limits_;
  std::chrono::steady_clock::time_point start_;
  std::unordered_set<CanonicalCode, CanonicalCodeHash> seen_;
  std::map<CanonicalCode, Candidate> found_;
  std::size_t states_ = 0;
  bool exhausted_ = false;
};

// Graph on the vertices spanned by `edges`, with the origin of each vertex.
inline Subgraph edge_subgraph(std::span<const Edge> edges) {
  std::vector<Vertex> verts;
  for (const Edge& e : edges) {
    verts.push_back(e.u);
    verts.push_back(e.v);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  Subgraph out{Graph(verts.size()), verts};
  auto index = [&](Vertex v) {
    return static_cast<Vertex>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
  };
  for (const Edge& e : edges) out.graph.add_edge(index(e.u), index(e.v));
  return out;
}

// Circuit through `edge` inside `base` + edge, found by dropping other edges
// while the set stays dependent.
inline std::vector<Edge> circuit_through(std::size_t order, std::vector<Edge> base,
                                         const Edge& edge) {
  base.push_back(edge);
  for (std::size_t i = 0; i + 1 < base.size();) {
    std::vector<Edge> trial = base;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
    if (!is_sparse_edge_set(order, trial)) {
      base.swap(trial);
    } else {
      ++i;
    }
  }
  std::sort(base.begin(), base.end());
  return base;
}

}  // namespace detail

// Every inclusion-minimal density-critical subgraph of g up to isomorphism,
// sorted by canonical code.
inline CandidateReport minimal_density_critical(const Graph& g, const SearchLimits& limits = {}) {
  if (g.order() > limits.max_order) {
    throw InvalidInput("minimal_density_critical: order " + std::to_string(g.order()) +
                       " exceeds search bound " + std::to_string(limits.max_order));
  }
  return detail::CandidateSearch(g, limits).run();
}

// For sources too large for the exhaustive search: the fundamental circuit of
// each edge rejected by the pebble game, deduplicated up to isomorphism.
inline CandidateReport fundamental_circuit_candidates(const Graph& g, const SearchLimits& limits = {}) {
  const auto start = std::chrono::steady_clock::now();
  CandidateReport report;
  report.source = g;
  report.method = "fundamental-circuits";
  report.complete = false;
  std::map<CanonicalCode, Candidate> found;
  PebbleGame game(g.order());
  std::vector<Edge> accepted;
  for (const Edge& e : g.edges()) {
    if (game.insert(e.u, e.v)) {
      accepted.push_back(e);
      continue;
    }
    if (found.size() >= limits.max_circuits) continue;
    ++report.states_explored;
    const auto circuit = detail::circuit_through(g.order(), accepted, e);
    Subgraph sub = detail::edge_subgraph(circuit);
    if (sub.graph.order() > kGraph6MaxOrder) {
      ++report.oversized;
      continue;
    }
    CanonicalCode code = canonical_code(sub.graph, kGraph6MaxOrder);
    if (found.count(code)) continue;
    Candidate c;
    c.certificate = certificate_for(sub.graph, sub.origin);
    c.graph = std::move(sub.graph);
    c.embedding = std::move(sub.origin);
    c.code = code;
    found.emplace(std::move(code), std::move(c));
  }
  for (auto& [code, c] : found) report.candidates.push_back(std::move(c));
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

// ---------------------------------------------------------------------------
// Pipeline.

struct PipelineParams {
  BuildMethod method = BuildMethod::kGreedy;
  std::size_t start_order = 0;  // 0: 4 * g
  std::size_t max_order = 512;
  std::size_t degree_cap = 6;
  Rational edge_probability{0};  // 0: 2 * 4 / order
  std::uint64_t seed = 0;
  SearchLimits search;
};

struct ExcludedGraph {
  Graph graph;
  std::size_t shortest_cycle = 0;
};

struct DistinctnessCheck {
  std::size_t candidate = 0;
  std::size_t excluded = 0;
  bool girth_argument = false;  // girth(candidate) >= g > shortest_cycle(excluded)
  bool embedding_absent = false;
};

struct BuildAttempt {
  std::size_t order = 0;
  std::size_t edges = 0;
  Rational average_degree;
};

struct PipelineReport {
  std::vector<ExcludedGraph> excluded;
  std::size_t g = 0;
  Construction g0;
  std::vector<BuildAttempt> attempts;
  bool girth_ok = false;
  bool average_degree_ok = false;
  bool edge_density_ok = false;  // e(G0) >= 2 v(G0)
  RslVerdict g0_verdict;
  CandidateReport candidates;
  std::vector<DistinctnessCheck> distinctness;
};

class ExcludedForest : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline PipelineReport nonlinear_family_pipeline(const std::vector<Graph>& excluded,
                                        const PipelineParams& params = {}) {
  PipelineReport report;
  if (excluded.empty()) throw InvalidInput("pipeline needs at least one excluded graph");
  std::size_t longest = 0;
  for (std::size_t i = 0; i < excluded.size(); ++i) {
    const Girth gi = girth(excluded[i]);
    if (gi.is_acyclic()) {
      throw ExcludedForest("excluded graph " + std::to_string(i) +
                           " is a forest; forests are size-linear and have no cycle");
    }
    report.excluded.push_back({excluded[i], gi.value()});
    longest = std::max(longest, gi.value());
  }
  report.g = longest + 1;
  const std::size_t g = report.g;

  std::size_t order = params.start_order ? params.start_order : 4 * g;
  order = std::max(order, g);
  bool built = false;
  while (order <= params.max_order) {
    Construction c;
    if (params.method == BuildMethod::kGreedy) {
      c = greedy_high_girth(order, g, params.degree_cap, params.seed);
    } else {
      Rational p = params.edge_probability;
      if (p == Rational(0)) p = Rational(8, static_cast<std::int64_t>(order));
      if (p >= Rational(1)) p = Rational(1, 2);
      c = deletion_high_girth(order, g, p, params.seed);
    }
    report.attempts.push_back({order, c.graph.size(), c.log.final_stats.average_degree});
    if (c.log.final_stats.average_degree >= Rational(4)) {
      report.g0 = std::move(c);
      built = true;
      break;
    }
    order *= 2;
  }
  if (!built) {
    throw BudgetExhausted("no graph with girth >= " + std::to_string(g) +
                          " and average degree >= 4 up to order " +
                          std::to_string(params.max_order));
  }
  const Graph& g0 = report.g0.graph;
  report.girth_ok = girth(g0).at_least(g);
  report.average_degree_ok = average_degree(g0) >= Rational(4);
  report.edge_density_ok = g0.size() >= 2 * g0.order();
  report.g0_verdict = classify(g0, KnowledgeBase::defaults());

  report.candidates = g0.order() <= params.search.max_order
                          ? minimal_density_critical(g0, params.search)
                          : fundamental_circuit_candidates(g0, params.search);
  for (std::size_t c = 0; c < report.candidates.candidates.size(); ++c) {
    const Graph& cand = report.candidates.candidates[c].graph;
    const Girth cg = girth(cand);
    for (std::size_t i = 0; i < report.excluded.size(); ++i) {
      DistinctnessCheck check;
      check.candidate = c;
      check.excluded = i;
      check.girth_argument = cg.at_least(g) && g > report.excluded[i].shortest_cycle;
      check.embedding_absent = !subgraph_embedding(report.excluded[i].graph, cand).has_value();
      report.distinctness.push_back(check);
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// JSON.

inline nlohmann::json to_json(const CandidateReport& r, bool include_source = true) {
  nlohmann::json cands = nlohmann::json::array();
  for (const Candidate& c : r.candidates) {
    cands.push_back({{"graph", graph6_encode(c.graph)},
                     {"canonical_code", c.code.hex()},
                     {"order", c.graph.order()},
                     {"edges", c.graph.size()},
                     {"embedding", c.embedding},
                     {"certificate", to_json(c.certificate)}});
  }
  nlohmann::json out = {{"candidates", std::move(cands)},
                        {"method", r.method},
                        {"complete", r.complete},
                        {"caveat", kCandidateCaveat},
                        {"stats", {{"states_explored", r.states_explored},
                                   {"oversized_circuits", r.oversized},
                                   {"wall_ms", static_cast<std::int64_t>(r.wall_seconds * 1000)}}}};
  if (include_source) out["source"] = graph6_encode(r.source);
  return out;
}

// Re-checks every candidate in a serialized report: shape, embedding into the
// source, and certificate.
inline bool validate_candidate_report_json(const nlohmann::json& j) {
  try {
    const Graph source = graph6_decode(j.at("source").get<std::string>());
    for (const auto& c : j.at("candidates")) {
      const Graph g = graph6_decode(c.at("graph").get<std::string>());
      if (!is_minimal_density_critical(g)) return false;
      if (canonical_code(g, kGraph6MaxOrder).hex() != c.at("canonical_code")) return false;
      if (!is_valid_embedding(g, source, c.at("embedding").get<Embedding>())) return false;
    }
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

inline nlohmann::json to_json(const PipelineReport& r) {
  nlohmann::json excluded = nlohmann::json::array();
  for (const auto& e : r.excluded) {
    excluded.push_back({{"graph", graph6_encode(e.graph)}, {"shortest_cycle", e.shortest_cycle}});
  }
  nlohmann::json attempts = nlohmann::json::array();
  for (const auto& a : r.attempts) {
    attempts.push_back({{"order", a.order},
                        {"edges", a.edges},
                        {"average_degree", to_string(a.average_degree)}});
  }
  nlohmann::json distinct = nlohmann::json::array();
  for (const auto& d : r.distinctness) {
    distinct.push_back({{"candidate", d.candidate},
                        {"excluded", d.excluded},
                        {"girth_argument", d.girth_argument},
                        {"embedding_absent", d.embedding_absent}});
  }
  nlohmann::json g0 = {{"construction", to_json(r.g0.log)}};
  g0["graph"] = r.g0.graph.order() <= kGraph6MaxOrder ? nlohmann::json(graph6_encode(r.g0.graph))
                                                      : nlohmann::json(nullptr);
  g0["edge_list"] = nlohmann::json::array();
  for (const Edge& e : r.g0.graph.edges()) g0["edge_list"].push_back({e.u, e.v});
  g0["order"] = r.g0.graph.order();
  g0["status"] = to_string(r.g0_verdict.status);
  return {{"excluded", std::move(excluded)},
          {"g", r.g},
          {"attempts", std::move(attempts)},
          {"G0", std::move(g0)},
          {"checks",
           {{"girth_at_least_g", r.girth_ok},
            {"average_degree_at_least_4", r.average_degree_ok},
            {"edges_at_least_2v", r.edge_density_ok}}},
          {"candidates", to_json(r.candidates, false)},
          {"distinctness", std::move(distinct)},
          {"caveat", kCandidateCaveat}};
}

}  // namespace rsl

#endif  // RSL_MINSEARCH_HPP_
