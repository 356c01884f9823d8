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

// Acceptance run: one PASS/FAIL line per criterion on stdout, details of
// failures on stderr, nonzero exit if anything failed.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "rsl/rsl.hpp"
#include "support/oracles.hpp"

#ifndef RSL_CLI_PATH
#error "RSL_CLI_PATH must name the rsl binary"
#endif
#ifndef RSL_DATA_DIR
#error "RSL_DATA_DIR must name the fixture directory"
#endif

namespace rsl {
namespace {

using Clock = std::chrono::steady_clock;

// Wall-time limits, seconds.
constexpr double kK3K3Limit = 1;
constexpr double kP4K3Limit = 30;
constexpr double kK3MatchingLimit = 60;
constexpr double kK3K4Limit = 600;
constexpr double kGreedyLimit = 60;
constexpr double kCandidateLimit = 60;

constexpr unsigned kThreads = 4;

// Greedy parameters at which average degree 4 is reached (degree cap 6).
struct GreedyParams {
  std::size_t girth;
  std::size_t order;
};
constexpr GreedyParams kGreedyDocumented[] = {{4, 48}, {5, 96}, {6, 192}};
constexpr std::size_t kGreedyCap = 6;
constexpr std::uint64_t kGreedySeed = 1;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string g6(const Graph& g) { return g.order() <= kGraph6MaxOrder ? graph6_encode(g) : "(large)"; }

class Criterion {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::vector<std::string> failures_;
};

int run(int id, const std::string& title, const std::function<void(Criterion&)>& body) {
  Criterion c;
  const auto start = Clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  const double took = seconds_since(start);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1fs", took);
  if (c.failures().empty()) {
    std::cout << "PASS " << id << " " << title << " (" << buf << ")" << std::endl;
    return 0;
  }
  std::cout << "FAIL " << id << " " << title << " (" << buf << "): " << c.failures().front();
  if (c.failures().size() > 1) std::cout << " [+" << c.failures().size() - 1 << " more]";
  std::cout << std::endl;
  for (const auto& f : c.failures()) std::cerr << "  criterion " << id << ": " << f << "\n";
  return 1;
}

// Witness on value - 1 vertices, checked by the library and by brute force.
void check_exact(Criterion& c, const RamseyResult& r, std::int64_t want, const std::string& label) {
  c.expect(r.exact(), label + ": not exact (lo " + std::to_string(r.lo) + ", hi " + std::to_string(r.hi) + ")");
  if (!r.exact()) return;
  c.expect(*r.value == want, label + ": value " + std::to_string(*r.value) + ", expected " + std::to_string(want));
  c.expect(r.lo == *r.value && r.hi == *r.value, label + ": bounds disagree with value");
  c.expect(r.analytic.lo <= *r.value && *r.value <= r.analytic.hi, label + ": outside analytic bounds");
  if (*r.value <= 1) return;
  c.expect(r.witness.has_value(), label + ": no witness");
  if (!r.witness) return;
  const Coloring& w = *r.witness;
  c.expect(static_cast<std::int64_t>(w.n) + 1 == *r.value, label + ": witness on the wrong order");
  c.expect(validate_witness(r.g, r.h, w), label + ": witness rejected");
  c.expect(!oracle::brute_embeds(r.g, w.red_graph()) && !oracle::brute_embeds(r.h, w.blue_graph()),
           label + ": witness has a monochromatic pattern");
}

RamseyResult timed_exact(Criterion& c, const Graph& g, const Graph& h, double limit, const std::string& label) {
  RamseyBudget budget;
  budget.threads = kThreads;
  budget.max_seconds = limit;
  const auto start = Clock::now();
  RamseyResult r = ramsey_exact(g, h, budget);
  const double took = seconds_since(start);
  c.expect(took < limit, label + ": took " + std::to_string(took) + "s, limit " + std::to_string(limit) + "s");
  return r;
}

void criterion_exact_values(Criterion& c) {
  const Graph k3 = catalog::complete(3);
  {
    const RamseyResult r = timed_exact(c, k3, k3, kK3K3Limit, "r(K3,K3)");
    check_exact(c, r, 6, "r(K3,K3)");
    c.expect(r.value && *r.value <= sidorenko_bound(k3), "r(K3,K3) above the triangle bound");
  }
  {
    const Graph p4 = catalog::path(4);
    const RamseyResult r = timed_exact(c, p4, k3, kP4K3Limit, "r(P4,K3)");
    check_exact(c, r, 7, "r(P4,K3)");
    c.expect(r.value && *r.value == chvatal_tree_ramsey(4, 3), "r(P4,K3) disagrees with the tree formula");
  }
  for (std::size_t m : {2u, 3u, 4u}) {
    const std::string label = "r(K3," + std::to_string(m) + "K2)";
    const Graph h = catalog::matching(m);
    const RamseyResult r = timed_exact(c, k3, h, kK3MatchingLimit, label);
    check_exact(c, r, static_cast<std::int64_t>(2 * m + 1), label);
    c.expect(r.value && *r.value == sidorenko_bound(h), label + ": triangle bound not tight on a matching");
  }
  {
    const Graph k4 = catalog::complete(4);
    const RamseyResult r = timed_exact(c, k3, k4, kK3K4Limit, "r(K3,K4)");
    check_exact(c, r, 9, "r(K3,K4)");
    c.expect(r.value && *r.value <= sidorenko_bound(k4), "r(K3,K4) above the triangle bound");
  }
}

void criterion_tree_suite(Criterion& c) {
  std::size_t trees = 0;
  for (std::size_t v = 2; v <= 5; ++v) {
    for (const Graph& t : all_graphs(v)) {
      if (t.size() + 1 != v || !is_connected(t)) continue;
      ++trees;
      for (std::size_t n : {2u, 3u}) {
        const std::string label = "r(" + g6(t) + ",K" + std::to_string(n) + ")";
        RamseyBudget budget;
        budget.threads = kThreads;
        const RamseyResult r = ramsey_exact(t, catalog::complete(n), budget);
        const auto want = static_cast<std::int64_t>((v - 1) * (n - 1) + 1);
        check_exact(c, r, want, label);
        c.expect(chvatal_tree_ramsey(static_cast<std::int64_t>(v), static_cast<std::int64_t>(n)) == want,
                 label + ": library tree formula disagrees");
      }
    }
  }
  // 1 + 1 + 2 + 3 classes on 2..5 vertices.
  c.expect(trees == 7, "expected 7 trees on 2..5 vertices, found " + std::to_string(trees));
}

void criterion_triangle_suite(Criterion& c) {
  const Graph k3 = catalog::complete(3);
  std::size_t patterns = 0;
  for (const Graph& h : oracle::all_small_edge_graphs(4)) {
    ++patterns;
    const std::string label = "r(K3," + g6(h) + ")";
    RamseyBudget budget;
    budget.threads = kThreads;
    const RamseyResult r = ramsey_exact(k3, h, budget);
    c.expect(r.exact(), label + ": not exact");
    if (!r.exact()) continue;
    check_exact(c, r, *r.value, label);
    const auto bound = static_cast<std::int64_t>(2 * h.size() + 1);
    c.expect(*r.value <= bound, label + " = " + std::to_string(*r.value) + " exceeds 2e+1");
    c.expect(sidorenko_bound(h) == bound, label + ": library bound disagrees");
    const bool tree = is_connected(h) && h.size() + 1 == h.order();
    const bool matching = h.order() == 2 * h.size();
    if (tree || matching) c.expect(*r.value == bound, label + ": bound not tight on a tree or matching");
  }
  // Graphs with 1..4 edges and no isolated vertex: 1 + 2 + 5 + 11.
  c.expect(patterns == 19, "expected 19 patterns, found " + std::to_string(patterns));
}

void criterion_certifier(Criterion& c) {
  const KnowledgeBase kb = KnowledgeBase::defaults();
  const Graph k4 = catalog::complete(4);
  std::size_t checked = 0;
  for (const Graph& g : all_graphs_up_to(7)) {
    ++checked;
    const std::string label = g6(g);
    const RuleSet rules = applicable_rules(g, kb);
    c.expect(rules.linear.empty() || rules.nonlinear.empty(), label + ": both linear and nonlinear rules fire");
    RslVerdict v;
    try {
      v = classify(g, kb);
    } catch (const InconsistentVerdict& e) {
      c.expect(false, label + ": " + e.what());
      continue;
    }
    if (g.size() > 0 && is_forest(g)) {
      c.expect(v.status == RslStatus::kCertifiedLinear, label + ": forest not certified linear");
    }
    if (oracle::brute_embeds(k4, g)) {
      c.expect(v.status == RslStatus::kCertifiedNonlinear, label + ": contains K4 but not certified nonlinear");
    }
    c.expect(v.status == RslStatus::kUnknown || !v.rules.empty(), label + ": certified without a rule");
  }
  // Classes on 1..7 vertices.
  c.expect(checked == 1 + 2 + 4 + 11 + 34 + 156 + 1044, "wrong class count " + std::to_string(checked));
  c.expect(classify(catalog::cycle(5), kb).status == RslStatus::kUnknown, "C5 is not Unknown");
}

void criterion_density(Criterion& c) {
  std::vector<Graph> inputs = oracle::density_corpus();
  const std::vector<Graph> classes = all_graphs_up_to(7);
  inputs.insert(inputs.end(), classes.begin(), classes.end());
  for (const Graph& g : inputs) {
    const std::string label = g6(g);
    const auto excess = oracle::max_excess(g);
    const auto cert = density_certificate(g);
    const bool dense = excess && *excess + 2 >= 0;
    c.expect(cert.has_value() == dense, label + ": certificate presence disagrees with brute force");
    const auto best = max_slack_set(g);
    c.expect(best.has_value() == excess.has_value(), label + ": slack set presence disagrees");
    if (best && excess) {
      c.expect(best->slack == *excess + 2, label + ": maximal slack " + std::to_string(best->slack) +
                                               ", brute force " + std::to_string(*excess + 2));
    }
    if (cert && excess) {
      c.expect(cert->slack == *excess + 2, label + ": certificate slack is not maximal");
      c.expect(validate_certificate(g, *cert), label + ": certificate rejected");
    }
  }
}

std::set<std::vector<bool>> brute_classes(const std::vector<Graph>& graphs) {
  std::set<std::vector<bool>> out;
  for (const Graph& g : graphs) out.insert(oracle::brute_canonical(g));
  return out;
}

void check_candidates(Criterion& c, const CandidateReport& r, const std::string& label) {
  for (const Candidate& cand : r.candidates) {
    const Graph& h = cand.graph;
    const std::string at = label + " candidate " + g6(h);
    c.expect(h.size() + 2 == 2 * h.order(), at + ": e != 2v - 2");
    c.expect(h.min_degree() >= 3, at + ": minimum degree below 3");
    c.expect(is_connected(h), at + ": disconnected");
    c.expect(is_valid_embedding(h, r.source, cand.embedding), at + ": embedding invalid");
    c.expect(oracle::brute_is_minimal_dense(h), at + ": not inclusion-minimal");
  }
}

CandidateReport timed_candidates(Criterion& c, const Graph& g, const std::string& label) {
  const auto start = Clock::now();
  CandidateReport r = minimal_density_critical(g);
  const double took = seconds_since(start);
  c.expect(took < kCandidateLimit, label + ": took " + std::to_string(took) + "s");
  c.expect(r.complete, label + ": search incomplete");
  check_candidates(c, r, label);
  return r;
}

bool has_class(const CandidateReport& r, const Graph& g) {
  const auto want = oracle::brute_canonical(g);
  for (const Candidate& cand : r.candidates) {
    if (cand.graph.order() == g.order() && oracle::brute_canonical(cand.graph) == want) return true;
  }
  return false;
}

void criterion_candidates(Criterion& c) {
  const Graph k4 = catalog::complete(4);
  {
    const CandidateReport r = timed_candidates(c, k4, "K4");
    c.expect(r.candidates.size() == 1 && has_class(r, k4), "K4: candidate set is not {K4}");
  }
  {
    const CandidateReport r = timed_candidates(c, catalog::complete_bipartite(4, 4), "K4,4");
    c.expect(has_class(r, catalog::complete_bipartite(3, 4)), "K4,4: K3,4 missing");
  }
  {
    const CandidateReport r = timed_candidates(c, catalog::complete_tripartite(2, 2, 2), "K2,2,2");
    c.expect(has_class(r, catalog::wheel(4)), "K2,2,2: W4 missing");
    c.expect(!has_class(r, k4), "K2,2,2: K4 reported");
  }
  const std::vector<Graph> minimal = oracle::minimal_dense_classes(7);
  for (const Graph& g : all_graphs_up_to(7)) {
    const std::string label = g6(g);
    std::vector<Graph> expected;
    for (const Graph& m : minimal) {
      if (oracle::brute_embeds(m, g)) expected.push_back(m);
    }
    const CandidateReport r = minimal_density_critical(g);
    c.expect(r.complete, label + ": search incomplete");
    std::vector<Graph> got;
    for (const Candidate& cand : r.candidates) got.push_back(cand.graph);
    c.expect(got.size() == expected.size() && brute_classes(got) == brute_classes(expected),
             label + ": candidate set differs from brute force");
    check_candidates(c, r, label);
  }
}

void criterion_construction(Criterion& c) {
  for (const auto& [g, order] : kGreedyDocumented) {
    const std::string label = "greedy(" + std::to_string(order) + ", g=" + std::to_string(g) + ")";
    const auto start = Clock::now();
    const Construction built = greedy_high_girth(order, g, kGreedyCap, kGreedySeed);
    const double took = seconds_since(start);
    c.expect(took < kGreedyLimit, label + ": took " + std::to_string(took) + "s");
    c.expect(girth(built.graph).at_least(g), label + ": girth below target");
    const auto girth_oracle = oracle::shortest_cycle(built.graph);
    c.expect(!girth_oracle || *girth_oracle >= g, label + ": brute-force girth below target");
    c.expect(built.graph.size() >= 2 * built.graph.order(), label + ": average degree below 4");
    const Construction again = greedy_high_girth(order, g, kGreedyCap, kGreedySeed);
    c.expect(again.graph == built.graph && again.log == built.log, label + ": not seed-deterministic");
    c.expect(replay(built.log) == built.graph, label + ": replay differs");
    c.expect(replay(construction_log_from_json(to_json(built.log))) == built.graph,
             label + ": replay from JSON differs");
  }
  const struct {
    std::size_t order, g;
    Rational p;
    std::uint64_t seed;
  } deletions[] = {{30, 3, Rational(1, 2), 1}, {40, 4, Rational(1, 4), 2}, {60, 5, Rational(2, 15), 3},
                   {100, 5, Rational(8, 100), 7}, {80, 6, Rational(1, 10), 11}, {12, 8, Rational(9, 10), 5}};
  for (const auto& d : deletions) {
    const std::string label = "deletion(" + std::to_string(d.order) + ", g=" + std::to_string(d.g) +
                              ", seed " + std::to_string(d.seed) + ")";
    const Construction built = deletion_high_girth(d.order, d.g, d.p, d.seed);
    const auto girth_oracle = oracle::shortest_cycle(built.graph);
    c.expect(!girth_oracle || *girth_oracle >= d.g, label + ": girth below target");
    const Construction again = deletion_high_girth(d.order, d.g, d.p, d.seed);
    c.expect(again.graph == built.graph && again.log == built.log, label + ": not seed-deterministic");
    c.expect(replay(built.log) == built.graph, label + ": replay differs");
    c.expect(replay(construction_log_from_json(to_json(built.log))) == built.graph,
             label + ": replay from JSON differs");
  }
}

void criterion_pipeline(Criterion& c) {
  const Graph k4 = catalog::complete(4);
  const PipelineReport r = nonlinear_family_pipeline({k4});
  const Graph& g0 = r.g0.graph;
  c.expect(r.g == 4, "g = " + std::to_string(r.g) + ", expected 4");
  c.expect(girth(g0).at_least(4), "G0 girth below 4");
  c.expect(r.g0_verdict.status == RslStatus::kCertifiedNonlinear, "G0 not certified nonlinear");
  c.expect(r.g0_verdict.density.has_value() && validate_certificate(g0, *r.g0_verdict.density),
           "G0 density certificate missing or invalid");
  c.expect(g0.size() >= 2 * g0.order(), "e(G0) < 2 v(G0)");
  c.expect(!r.candidates.candidates.empty(), "candidate set empty");
  c.expect(r.distinctness.size() == r.candidates.candidates.size(), "distinctness checks missing");
  for (const DistinctnessCheck& d : r.distinctness) {
    const std::string at = "candidate " + std::to_string(d.candidate);
    c.expect(d.girth_argument, at + ": girth argument fails");
    c.expect(d.embedding_absent, at + ": embedding check fails");
  }
  for (const Candidate& cand : r.candidates.candidates) {
    const std::string at = "candidate " + g6(cand.graph);
    c.expect(is_valid_embedding(cand.graph, g0, cand.embedding), at + ": not a subgraph of G0");
    c.expect(is_minimal_density_critical(cand.graph), at + ": not minimal dense");
    c.expect(girth(cand.graph).at_least(4), at + ": girth below 4");
    c.expect(!is_subgraph(k4, cand.graph), at + ": contains K4");
  }
  bool rejected = false;
  try {
    nonlinear_family_pipeline({catalog::path(4)});
  } catch (const ExcludedForest&) {
    rejected = true;
  }
  c.expect(rejected, "[P4] not rejected as a forest");
}

// -- criterion 9 --

nlohmann::json without_stats(nlohmann::json j) {
  if (j.is_object()) {
    j.erase("stats");
    for (auto& [key, value] : j.items()) value = without_stats(value);
  } else if (j.is_array()) {
    for (auto& value : j) value = without_stats(value);
  }
  return j;
}

struct CliRun {
  int status = -1;
  std::string out;
};

CliRun run_cli(const std::string& args) {
  const std::string cmd = std::string("'") + RSL_CLI_PATH + "' --no-store " + args + " 2>/dev/null";
  CliRun result;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(::popen(cmd.c_str(), "r"), ::pclose);
  if (!pipe) return result;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe.get())) > 0) result.out.append(buf, got);
  result.status = ::pclose(pipe.release());
  return result;
}

std::vector<nlohmann::json> stripped_lines(const std::string& text) {
  std::vector<nlohmann::json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(without_stats(nlohmann::json::parse(line)));
  return out;
}

void criterion_roundtrip(Criterion& c) {
  const std::filesystem::path data(RSL_DATA_DIR);
  std::size_t files = 0, lines = 0;
  for (const auto& entry : std::filesystem::directory_iterator(data)) {
    if (entry.path().extension() != ".g6") continue;
    ++files;
    std::ifstream in(entry.path());
    for (std::string line; std::getline(in, line);) {
      if (line.empty()) continue;
      ++lines;
      const std::string at = entry.path().filename().string() + " line " + std::to_string(lines);
      const Graph g = graph6_decode(line);
      c.expect(graph6_encode(g) == line, at + ": encode(decode(x)) != x");
      c.expect(graph6_decode(graph6_encode(g)) == g, at + ": decode(encode(g)) != g");
    }
  }
  c.expect(files >= 8 && lines >= 200, "fixture corpus too small: " + std::to_string(files) + " files, " +
                                           std::to_string(lines) + " graphs");

  const std::string dir = "'" + data.string() + "/";
  const std::vector<std::string> invocations = {
      "ramsey --g K3 --h K3",
      "--threads 4 ramsey --g " + dir + "p4.g6' --h K3",
      "construct greedy --order 48 --girth 4 --cap 6 --seed 1",
      "construct deletion --order 60 --girth 5 --seed 9",
      "certify --in " + dir + "corpus.g6'",
      "minimal-candidates --in " + dir + "k2_2_2.g6' " + dir + "k4_4.g6'",
      "pipeline --exclude " + dir + "k4.g6'",
      "evidence --g K3 --family matchings --max-k 3",
      "catalog K4 W4 Petersen",
  };
  for (const std::string& args : invocations) {
    const CliRun a = run_cli(args);
    const CliRun b = run_cli(args);
    c.expect(a.status == 0 && b.status == 0, "rsl " + args + ": nonzero exit");
    c.expect(!a.out.empty(), "rsl " + args + ": no output");
    try {
      c.expect(stripped_lines(a.out) == stripped_lines(b.out), "rsl " + args + ": outputs differ");
    } catch (const nlohmann::json::exception& e) {
      c.expect(false, "rsl " + args + ": unparsable output: " + e.what());
    }
  }

  const Graph k3 = catalog::complete(3);
  const std::vector<std::pair<Graph, Graph>> pairs = {
      {k3, k3}, {k3, catalog::complete(4)}, {catalog::path(4), k3}, {k3, catalog::matching(4)},
      {catalog::cycle(4), catalog::cycle(4)}, {catalog::cycle(5), catalog::cycle(5)}};
  for (const auto& [g, h] : pairs) {
    const std::string label = "r(" + g6(g) + "," + g6(h) + ")";
    RamseyBudget one;
    one.threads = 1;
    RamseyBudget four = one;
    four.threads = 4;
    const RamseyResult a = ramsey_exact(g, h, one);
    const RamseyResult b = ramsey_exact(g, h, four);
    c.expect(a.exact() && b.exact(), label + ": not exact");
    c.expect(a.value == b.value && a.lo == b.lo && a.hi == b.hi, label + ": value depends on thread count");
    c.expect(a.witness == b.witness, label + ": witness depends on thread count");
    c.expect(a.nodes == b.nodes, label + ": node count depends on thread count");
  }
}

}  // namespace
}  // namespace rsl

int main() {
  using namespace rsl;
  int failed = 0;
  failed += run(1, "exact Ramsey values with validated witnesses", criterion_exact_values);
  failed += run(2, "tree suite r(T,Kn) = (v(T)-1)(n-1)+1", criterion_tree_suite);
  failed += run(3, "triangle suite r(K3,H) <= 2e(H)+1", criterion_triangle_suite);
  failed += run(4, "certifier consistency on all graphs of order <= 7", criterion_certifier);
  failed += run(5, "density oracle equivalence", criterion_density);
  failed += run(6, "minimal-candidate correctness", criterion_candidates);
  failed += run(7, "construction suite", criterion_construction);
  failed += run(8, "pipeline property suite", criterion_pipeline);
  failed += run(9, "round trip and determinism", criterion_roundtrip);
  std::cout << (failed == 0 ? "ALL PASS" : std::to_string(failed) + " FAILED") << std::endl;
  return failed == 0 ? 0 : 1;
}
