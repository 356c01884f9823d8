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

// rsl: command-line front end. Every result is one JSON object per line on
// stdout; diagnostics go to stderr. Exit status 0 on success, 1 when a
// computation ran out of budget (or I/O failed), 2 on bad usage or input.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "rsl/rsl.hpp"

namespace {

using nlohmann::json;
using rsl::Graph;

constexpr int kOk = 0;
constexpr int kBudget = 1;
constexpr int kUsage = 2;

struct Options {
  unsigned threads = 1;
  bool no_store = false;
};

class Stopwatch {
 public:
  std::int64_t ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                 start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void emit(const json& j) { std::cout << j.dump() << '\n' << std::flush; }

// File, then catalog name, then a graph6 literal.
std::vector<Graph> resolve_graphs(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    if (!in) throw rsl::InvalidInput("cannot read " + arg);
    auto graphs = rsl::read_graph6_stream(in);
    if (graphs.empty()) throw rsl::InvalidInput(arg + " holds no graphs");
    return graphs;
  }
  try {
    return {rsl::catalog::named_graph(arg)};
  } catch (const rsl::InvalidInput&) {
  }
  try {
    return {rsl::graph6_decode(arg)};
  } catch (const rsl::InvalidInput&) {
  }
  throw rsl::InvalidInput("'" + arg + "' is not a file, a catalog name, or a graph6 string");
}

Graph resolve_one(const std::string& arg) {
  auto graphs = resolve_graphs(arg);
  if (graphs.size() != 1) throw rsl::InvalidInput("'" + arg + "' must name exactly one graph");
  return graphs.front();
}

std::optional<rsl::ResultStore> open_store(const Options& opt) {
  if (opt.no_store) return std::nullopt;
  return rsl::ResultStore::from_environment();
}

// Store keys need a canonical code; larger graphs are not cached.
constexpr std::size_t kStoreMaxOrder = 32;

// ---------------------------------------------------------------------------

struct ConstructArgs {
  std::string method;
  std::size_t order = 0;
  std::size_t girth = 0;
  std::size_t cap = 6;
  std::uint64_t seed = 0;
  std::string p;
  std::string out;
};

int run_construct(const ConstructArgs& a) {
  Stopwatch clock;
  rsl::Construction c;
  if (a.method == "greedy") {
    c = rsl::greedy_high_girth(a.order, a.girth, a.cap, a.seed);
  } else {
    rsl::Rational p = a.p.empty()
                          ? std::min(rsl::Rational(1, 2), rsl::Rational(8, static_cast<std::int64_t>(
                                                                               std::max<std::size_t>(a.order, 1))))
                          : rsl::parse_rational(a.p);
    c = rsl::deletion_high_girth(a.order, a.girth, p, a.seed);
  }
  const bool small = c.graph.order() <= rsl::kGraph6MaxOrder;
  json out = {{"graph", small ? json(rsl::graph6_encode(c.graph)) : json(nullptr)},
              {"order", c.graph.order()},
              {"edges", c.graph.size()},
              {"log", rsl::to_json(c.log)},
              {"stats", {{"wall_ms", clock.ms()}}}};
  if (!a.out.empty()) {
    if (!small) throw rsl::InvalidInput("graph too large for graph6 output");
    std::ofstream f(a.out);
    f << rsl::graph6_encode(c.graph) << '\n';
    if (!f) throw rsl::StoreError("cannot write " + a.out);
  }
  emit(out);
  return kOk;
}

// ---------------------------------------------------------------------------

struct CertifyArgs {
  std::vector<std::string> inputs;
  std::string facts;
};

int run_certify(const CertifyArgs& a, const Options& opt) {
  rsl::KnowledgeBase kb = rsl::KnowledgeBase::defaults();
  if (!a.facts.empty()) {
    std::ifstream in(a.facts);
    if (!in) throw rsl::InvalidInput("cannot read facts file " + a.facts);
    json facts = json::parse(in, nullptr, false);
    if (facts.is_discarded()) throw rsl::InvalidInput("facts file is not JSON");
    kb.load(facts);
  }
  // Cached verdicts assume the default facts.
  auto store = a.facts.empty() ? open_store(opt) : std::nullopt;
  for (const auto& input : a.inputs) {
    for (const Graph& g : resolve_graphs(input)) {
      Stopwatch clock;
      const std::string g6 = rsl::graph6_encode(g);
      std::optional<json> verdict;
      std::string key;
      std::string cache = "off";
      if (store && g.order() <= kStoreMaxOrder) {
        key = rsl::verdict_key(rsl::canonical_code(g));
        verdict = store->get(key, rsl::validate_verdict_json);
        if (verdict && verdict->at("graph") != g6) verdict.reset();
        cache = verdict ? "hit" : "miss";
      }
      if (!verdict) {
        verdict = rsl::to_json(rsl::classify(g, kb));
        if (!key.empty()) store->put(key, *verdict);
      }
      (*verdict)["stats"] = {{"wall_ms", clock.ms()}, {"store", cache}};
      emit(*verdict);
    }
  }
  return kOk;
}

// ---------------------------------------------------------------------------

struct CandidateArgs {
  std::vector<std::string> inputs;
  rsl::SearchLimits limits;
  bool fallback = false;
};

int run_candidates(const CandidateArgs& a, const Options& opt) {
  auto store = open_store(opt);
  int rc = kOk;
  for (const auto& input : a.inputs) {
    for (const Graph& g : resolve_graphs(input)) {
      if (g.order() > a.limits.max_order && !a.fallback) {
        std::cerr << "rsl: order " << g.order() << " exceeds --max-order " << a.limits.max_order
                  << " (use --fallback for fundamental circuits)\n";
        rc = kBudget;
        continue;
      }
      Stopwatch clock;
      const std::string g6 = rsl::graph6_encode(g);
      std::optional<json> report;
      std::string key;
      std::string cache = "off";
      if (store && g.order() <= kStoreMaxOrder && g.order() <= a.limits.max_order) {
        key = rsl::candidates_key(rsl::canonical_code(g));
        report = store->get(key, rsl::validate_candidate_report_json);
        if (report && report->at("source") != g6) report.reset();
        cache = report ? "hit" : "miss";
      }
      if (!report) {
        const rsl::CandidateReport r = g.order() <= a.limits.max_order
                                           ? rsl::minimal_density_critical(g, a.limits)
                                           : rsl::fundamental_circuit_candidates(g, a.limits);
        report = rsl::to_json(r);
        if (!key.empty() && r.complete) store->put(key, *report);
      }
      if (report->at("method") == "deletion-search" && !report->at("complete").get<bool>()) {
        rc = kBudget;
      }
      (*report)["stats"]["wall_ms"] = clock.ms();
      (*report)["stats"]["store"] = cache;
      emit(*report);
    }
  }
  return rc;
}

// ---------------------------------------------------------------------------

struct PipelineArgs {
  std::vector<std::string> exclude;
  std::string method = "greedy";
  rsl::PipelineParams params;
  std::string p;
};

int run_pipeline(const PipelineArgs& a) {
  Stopwatch clock;
  std::vector<Graph> excluded;
  for (const auto& e : a.exclude) {
    for (Graph& g : resolve_graphs(e)) excluded.push_back(std::move(g));
  }
  rsl::PipelineParams params = a.params;
  params.method = a.method == "greedy" ? rsl::BuildMethod::kGreedy : rsl::BuildMethod::kDeletion;
  if (!a.p.empty()) params.edge_probability = rsl::parse_rational(a.p);
  json out = rsl::to_json(rsl::nonlinear_family_pipeline(excluded, params));
  out["stats"] = {{"wall_ms", clock.ms()}};
  emit(out);
  return out["candidates"]["method"] == "deletion-search" && !out["candidates"]["complete"].get<bool>()
             ? kBudget
             : kOk;
}

// ---------------------------------------------------------------------------

struct BudgetArgs {
  double seconds = 0;
  std::uint64_t nodes = 0;
  std::size_t max_n = rsl::kRamseyHostCap;
  bool no_symmetry = false;

  rsl::RamseyBudget budget(const Options& opt) const {
    rsl::RamseyBudget b;
    b.max_seconds = seconds;
    b.max_nodes = nodes;
    b.max_n = max_n;
    b.threads = opt.threads;
    b.symmetry_breaking = !no_symmetry;
    return b;
  }
};

// Exact result for (g, h), through the store when enabled.
rsl::RamseyResult ramsey_with_store(const Graph& g, const Graph& h, const rsl::RamseyBudget& budget,
                                    std::optional<rsl::ResultStore>& store, std::string& cache) {
  cache = "off";
  std::string key;
  if (store && g.order() <= kStoreMaxOrder && h.order() <= kStoreMaxOrder) {
    key = rsl::ramsey_key(rsl::canonical_code(g), rsl::canonical_code(h));
    if (auto entry = store->get(key, rsl::validate_ramsey_json)) {
      if (auto r = rsl::reuse_result(rsl::ramsey_result_from_json(*entry), g, h); r && r->exact()) {
        cache = "hit";
        return *r;
      }
    }
    cache = "miss";
  }
  rsl::RamseyResult r = rsl::ramsey_exact(g, h, budget);
  if (!key.empty() && r.exact()) store->put(key, rsl::to_json(r));
  return r;
}

struct RamseyArgs {
  std::string g;
  std::string h;
  BudgetArgs budget;
};

int run_ramsey(const RamseyArgs& a, const Options& opt) {
  const Graph g = resolve_one(a.g);
  const Graph h = resolve_one(a.h);
  auto store = open_store(opt);
  std::string cache;
  const rsl::RamseyResult r = ramsey_with_store(g, h, a.budget.budget(opt), store, cache);
  json out = rsl::to_json(r);
  out["stats"]["store"] = cache;
  emit(out);
  return r.exact() ? kOk : kBudget;
}

struct EvidenceArgs {
  std::string g;
  std::string family;
  std::size_t min_k = 1;
  std::size_t max_k = 0;
  BudgetArgs budget;
};

int run_evidence(const EvidenceArgs& a, const Options& opt) {
  const Graph g = resolve_one(a.g);
  const rsl::Family family = rsl::parse_family(a.family);
  auto store = open_store(opt);
  int rc = kOk;
  for (std::size_t k = a.min_k; k <= a.max_k; ++k) {
    const Graph h = rsl::family_member(family, k);
    if (h.size() == 0) {
      std::cerr << "rsl: skipping k=" << k << " (member has no edges)\n";
      continue;
    }
    std::string cache;
    const rsl::RamseyResult r = ramsey_with_store(g, h, a.budget.budget(opt), store, cache);
    const auto e = static_cast<std::int64_t>(h.size());
    json row = {{"g", rsl::graph6_encode(g)},
                {"family", a.family},
                {"k", k},
                {"h", rsl::graph6_encode(h)},
                {"edges", e},
                {"exact", r.exact()},
                {"lo", r.lo},
                {"hi", r.hi}};
    if (r.exact()) {
      row["value"] = *r.value;
      row["ratio"] = rsl::to_string(rsl::Rational(*r.value, e));
    } else {
      row["ratio_interval"] = {rsl::to_string(rsl::Rational(r.lo, e)),
                               rsl::to_string(rsl::Rational(r.hi, e))};
      rc = kBudget;
    }
    if (r.witness) row["witness"] = rsl::to_json(*r.witness);
    row["stats"] = {{"nodes", r.nodes},
                    {"wall_ms", static_cast<std::int64_t>(r.wall_seconds * 1000)},
                    {"store", cache}};
    emit(row);
  }
  return rc;
}

// ---------------------------------------------------------------------------

int run_catalog(const std::vector<std::string>& names) {
  for (const auto& name : names) {
    const Graph g = rsl::catalog::named_graph(name);
    json out = {{"name", name},
                {"graph", g.order() <= rsl::kGraph6MaxOrder ? json(rsl::graph6_encode(g)) : json(nullptr)},
                {"order", g.order()},
                {"edges", g.size()},
                {"girth", rsl::girth_json(rsl::girth(g))}};
    emit(out);
  }
  return kOk;
}

void add_budget_options(CLI::App* cmd, BudgetArgs& b) {
  cmd->add_option("--budget", b.seconds, "Wall-time budget in seconds (0: none)")->check(CLI::NonNegativeNumber);
  cmd->add_option("--max-nodes", b.nodes, "Search-node budget (0: none)");
  cmd->add_option("--max-n", b.max_n, "Largest host order searched")->check(CLI::Range(1, 13));
  cmd->add_flag("--no-symmetry", b.no_symmetry, "Disable symmetry breaking at vertex 0");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ramsey size-linearity workbench"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--threads", opt.threads, "Worker threads for Ramsey searches")
      ->check(CLI::Range(1U, 256U));
  app.add_flag("--no-store", opt.no_store, "Do not read or write the result store");

  ConstructArgs construct;
  auto* c = app.add_subcommand("construct", "Build a graph of girth >= g");
  c->add_option("method", construct.method, "greedy or deletion")
      ->required()
      ->check(CLI::IsMember({"greedy", "deletion"}));
  c->add_option("--order", construct.order)->required();
  c->add_option("--girth", construct.girth)->required();
  c->add_option("--cap", construct.cap, "Degree cap (greedy)");
  c->add_option("--seed", construct.seed);
  c->add_option("--p", construct.p, "Edge probability p/q (deletion; default min(1/2, 8/order))");
  c->add_option("--out", construct.out, "Also write the graph6 line to this file");

  CertifyArgs certify;
  auto* cert = app.add_subcommand("certify", "Classify graphs as size-linear or not");
  cert->add_option("--in", certify.inputs, "graph6 file, catalog name, or graph6 string")->required();
  cert->add_option("--facts", certify.facts, "Extra facts (JSON array)");

  CandidateArgs cand;
  auto* mc = app.add_subcommand("minimal-candidates", "Minimal subgraphs with e >= 2v - 2");
  mc->add_option("--in", cand.inputs)->required();
  mc->add_option("--max-order", cand.limits.max_order);
  mc->add_option("--max-states", cand.limits.max_states);
  mc->add_option("--max-seconds", cand.limits.max_seconds);
  mc->add_flag("--fallback", cand.fallback, "Use fundamental circuits above --max-order");

  PipelineArgs pipe;
  auto* pl = app.add_subcommand("pipeline", "Build a non-linear graph avoiding the excluded graphs");
  pl->add_option("--exclude", pipe.exclude)->required();
  pl->add_option("--method", pipe.method)->check(CLI::IsMember({"greedy", "deletion"}));
  pl->add_option("--seed", pipe.params.seed);
  pl->add_option("--cap", pipe.params.degree_cap);
  pl->add_option("--start-order", pipe.params.start_order);
  pl->add_option("--max-order", pipe.params.max_order);
  pl->add_option("--p", pipe.p);
  pl->add_option("--search-max-order", pipe.params.search.max_order);
  pl->add_option("--max-states", pipe.params.search.max_states);
  pl->add_option("--max-seconds", pipe.params.search.max_seconds);

  RamseyArgs ramsey;
  auto* rm = app.add_subcommand("ramsey", "Exact two-color Ramsey number r(G,H)");
  rm->set_help_flag("--help", "Print this help message and exit");
  rm->add_option("--g", ramsey.g)->required();
  rm->add_option("--h", ramsey.h)->required();
  add_budget_options(rm, ramsey.budget);

  EvidenceArgs evidence;
  auto* ev = app.add_subcommand("evidence", "r(G,H_k)/e(H_k) along a family");
  ev->add_option("--g", evidence.g)->required();
  ev->add_option("--family", evidence.family)
      ->required()
      ->check(CLI::IsMember({"matchings", "paths", "stars"}));
  ev->add_option("--min-k", evidence.min_k);
  ev->add_option("--max-k", evidence.max_k)->required();
  add_budget_options(ev, evidence.budget);

  std::vector<std::string> names;
  auto* cat = app.add_subcommand("catalog", "Look up named graphs");
  cat->add_option("names", names)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (c->parsed()) return run_construct(construct);
    if (cert->parsed()) return run_certify(certify, opt);
    if (mc->parsed()) return run_candidates(cand, opt);
    if (pl->parsed()) return run_pipeline(pipe);
    if (rm->parsed()) return run_ramsey(ramsey, opt);
    if (ev->parsed()) return run_evidence(evidence, opt);
    if (cat->parsed()) return run_catalog(names);
  } catch (const rsl::InvalidInput& e) {
    std::cerr << "rsl: " << e.what() << '\n';
    return kUsage;
  } catch (const rsl::BudgetExhausted& e) {
    std::cerr << "rsl: " << e.what() << '\n';
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "rsl: " << e.what() << '\n';
    return kBudget;
  }
  return kUsage;
}
