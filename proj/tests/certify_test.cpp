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

#include <gtest/gtest.h>

#include <random>

#include "rsl/catalog.hpp"
#include "rsl/certify.hpp"
#include "rsl/enumerate.hpp"
#include "support/oracles.hpp"

namespace rsl {
namespace {

using catalog::named_graph;

const std::vector<Graph>& classes_up_to_7() {
  static const std::vector<Graph> all = all_graphs_up_to(7);
  return all;
}

bool has_rule(const RslVerdict& v, const std::string& rule) {
  return std::any_of(v.rules.begin(), v.rules.end(),
                     [&](const RuleApplication& r) { return r.rule == rule; });
}

// ---------------------------------------------------------------------------
// Formulas.

TEST(Formulas, ChvatalTreeRamsey) {
  EXPECT_EQ(chvatal_tree_ramsey(3, 3), 5);
  EXPECT_EQ(chvatal_tree_ramsey(4, 3), 7);
  EXPECT_EQ(chvatal_tree_ramsey(1, 5), 1);
  EXPECT_THROW(chvatal_tree_ramsey(0, 3), InvalidInput);
}

TEST(Formulas, SidorenkoBound) {
  EXPECT_EQ(sidorenko_bound(catalog::matching(2)), 5);
  EXPECT_EQ(sidorenko_bound(catalog::path(4)), 7);
  EXPECT_EQ(sidorenko_bound(catalog::complete(2)), 3);
  EXPECT_THROW(sidorenko_bound(Graph(3)), InvalidInput);
}

TEST(Formulas, ForestLinearBound) {
  EXPECT_EQ(forest_linear_bound(catalog::path(3), catalog::complete(3)), 11);
  EXPECT_EQ(forest_linear_bound(catalog::complete(2), catalog::complete(2)), 2);
  EXPECT_EQ(forest_linear_bound(catalog::path(4), catalog::matching(2)), 10);
  // A forest is bounded like a spanning tree of the same order.
  EXPECT_EQ(forest_linear_bound(catalog::matching(2), catalog::complete(2)), 4);
  EXPECT_THROW(forest_linear_bound(catalog::cycle(4), catalog::complete(2)), InvalidInput);
}

TEST(Formulas, ForestCoefficientDominatesBound) {
  for (const Graph& t : oracle::all_trees(7)) {
    const std::int64_t c = forest_linear_coefficient(t);
    EXPECT_EQ(c, 2 * static_cast<std::int64_t>(t.order() - 1) + 1);
    for (std::size_t e = 1; e <= 20; ++e) {
      EXPECT_LE(forest_linear_bound(t, catalog::matching(e)), c * static_cast<std::int64_t>(e));
    }
  }
}

TEST(Formulas, LllExponent) {
  EXPECT_EQ(lll_exponent(catalog::complete(4)), Rational(5, 2));
  EXPECT_EQ(lll_exponent(catalog::complete_bipartite(3, 4)), Rational(11, 5));
  EXPECT_EQ(lll_exponent(catalog::cycle(5)), Rational(4, 3));
  EXPECT_THROW(lll_exponent(catalog::complete(2)), InvalidInput);
}

TEST(Formulas, LllExponentAboveTwoIffDense) {
  for (const Graph& g : classes_up_to_7()) {
    if (g.order() < 3) continue;
    EXPECT_EQ(lll_exponent(g) > Rational(2), g.size() + 2 >= 2 * g.order()) << graph6_encode(g);
  }
}

// ---------------------------------------------------------------------------
// Density certificates.

TEST(Density, CertificateExamples) {
  const auto k4 = density_certificate(catalog::complete(4));
  ASSERT_TRUE(k4.has_value());
  EXPECT_EQ(k4->slack, 0);
  EXPECT_EQ(canonical_code(k4->witness), canonical_code(catalog::complete(4)));

  EXPECT_FALSE(density_certificate(catalog::path(6)).has_value());
  EXPECT_FALSE(density_certificate(named_graph("tree_from_pruefer(1,1,2,3)")).has_value());

  const auto oct = density_certificate(named_graph("K2_2_2"));
  ASSERT_TRUE(oct.has_value());
  EXPECT_GE(oct->slack, 2);
  EXPECT_TRUE(validate_certificate(named_graph("K2_2_2"), *oct));
}

void expect_matches_oracle(const Graph& g) {
  SCOPED_TRACE(g.order() <= kGraph6MaxOrder ? graph6_encode(g) : std::string());
  const auto cert = density_certificate(g);
  const auto excess = oracle::max_excess(g);
  const bool dense = excess && *excess + 2 >= 0;
  ASSERT_EQ(cert.has_value(), dense);
  if (!cert) return;
  EXPECT_EQ(cert->slack, *excess + 2);
  EXPECT_TRUE(validate_certificate(g, *cert));
  EXPECT_TRUE(oracle::brute_embeds(cert->witness, g));
}

TEST(Density, MatchesOracleOnAllOrderSeven) {
  for (const Graph& g : classes_up_to_7()) expect_matches_oracle(g);
}

TEST(Density, MatchesOracleOnRandomCorpus) {
  for (const Graph& g : oracle::density_corpus()) expect_matches_oracle(g);
}

TEST(Density, FlowAgreesWithExhaustive) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 400; ++trial) {
    const Graph g = oracle::random_graph_between(rng, 3, 16);
    const auto flow = detail::max_slack_flow(g);
    const auto exact = detail::max_slack_exhaustive(g);
    ASSERT_TRUE(flow && exact);
    SCOPED_TRACE(graph6_encode(g));
    if (exact->slack >= 0) {
      EXPECT_EQ(flow->slack, exact->slack);
    } else {
      EXPECT_LT(flow->slack, 0);
    }
    const Subgraph sub = induced_subgraph(g, flow->vertices);
    EXPECT_EQ(sub.graph.size(), flow->edges);
    EXPECT_GE(flow->vertices.size(), 3u);
  }
}

TEST(Density, FlowUsedAboveExhaustiveLimit) {
  // 22 vertices: K4 plus a long path, so the only dense set is the K4.
  Graph g = catalog::complete(4);
  Graph big(22);
  for (const Edge& e : g.edges()) big.add_edge(e.u, e.v);
  for (Vertex v = 3; v + 1 < 22; ++v) big.add_edge(v, v + 1);
  const auto cert = density_certificate(big);
  ASSERT_TRUE(cert.has_value());
  EXPECT_EQ(cert->slack, 0);
  EXPECT_EQ(cert->witness.order(), 4u);
  EXPECT_TRUE(validate_certificate(big, *cert));
}

TEST(Density, PebbleGameMatchesSparsity) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 600; ++trial) {
    const Graph g = oracle::random_graph_between(rng, 1, 9);
    const auto edges = g.edges();
    EXPECT_EQ(is_sparse_edge_set(g.order(), edges), oracle::brute_is_sparse(g)) << graph6_encode(g);
    EXPECT_EQ(has_dense_subgraph(g), !oracle::brute_is_sparse(g));
  }
}

TEST(Density, CircuitIsMinimalDense) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = oracle::random_graph_between(rng, 4, 10);
    const auto circuit = find_dense_circuit(g);
    ASSERT_EQ(circuit.has_value(), !oracle::brute_is_sparse(g));
    if (!circuit) continue;
    const Subgraph sub = without_isolated(Graph::from_edge_list(g.order(), *circuit));
    EXPECT_TRUE(oracle::brute_is_minimal_dense(sub.graph)) << graph6_encode(g);
  }
}

TEST(Density, TamperedCertificateRejected) {
  const Graph g = catalog::complete(5);
  auto cert = density_certificate(g);
  ASSERT_TRUE(cert.has_value());
  auto bad = *cert;
  bad.slack += 1;
  EXPECT_FALSE(validate_certificate(g, bad));
  bad = *cert;
  bad.embedding[0] = bad.embedding[1];
  EXPECT_FALSE(validate_certificate(g, bad));
  EXPECT_FALSE(validate_certificate(catalog::cycle(5), *cert));
}

// ---------------------------------------------------------------------------
// Classification.

TEST(Classify, Examples) {
  const KnowledgeBase kb = KnowledgeBase::defaults();

  const RslVerdict k4 = classify(catalog::complete(4), kb);
  EXPECT_EQ(k4.status, RslStatus::kCertifiedNonlinear);
  EXPECT_TRUE(has_rule(k4, "density"));
  ASSERT_TRUE(k4.density.has_value());

  const RslVerdict p5 = classify(catalog::path(5), kb);
  EXPECT_EQ(p5.status, RslStatus::kCertifiedLinear);
  EXPECT_TRUE(has_rule(p5, "forest"));
  EXPECT_EQ(p5.linear_coefficient, 9);

  const RslVerdict c5 = classify(catalog::cycle(5), kb);
  EXPECT_EQ(c5.status, RslStatus::kUnknown);
  EXPECT_TRUE(c5.rules.empty());

  const RslVerdict k5 = classify(catalog::complete(5), kb);
  EXPECT_EQ(k5.status, RslStatus::kCertifiedNonlinear);
  EXPECT_TRUE(has_rule(k5, "density"));
  EXPECT_TRUE(has_rule(k5, "contains-nonlinear-fact"));
}

// Linear by a K4-subgraph fact carries no coefficient.
TEST(Classify, ProperSubgraphsOfK4HaveNoCoefficient) {
  const KnowledgeBase kb = KnowledgeBase::defaults();
  for (const char* name : {"K3", "C4"}) {
    const RslVerdict v = classify(named_graph(name), kb);
    EXPECT_EQ(v.status, RslStatus::kCertifiedLinear) << name;
    EXPECT_TRUE(has_rule(v, "subgraph-of-linear-fact"));
    EXPECT_FALSE(v.linear_coefficient.has_value());
  }
  Graph diamond = catalog::complete(4);
  diamond.remove_edge(0, 1);
  EXPECT_EQ(classify(diamond, kb).status, RslStatus::kCertifiedLinear);
}

TEST(Classify, ConsistentOverAllOrderSeven) {
  const KnowledgeBase kb = KnowledgeBase::defaults();
  const Graph k4 = catalog::complete(4);
  for (const Graph& g : classes_up_to_7()) {
    SCOPED_TRACE(graph6_encode(g));
    const RuleSet rules = applicable_rules(g, kb);
    EXPECT_TRUE(rules.linear.empty() || rules.nonlinear.empty());
    const RslVerdict v = classify(g, kb);
    if (oracle::brute_is_forest(g)) {
      EXPECT_EQ(v.status, RslStatus::kCertifiedLinear);
      EXPECT_EQ(v.linear_coefficient, forest_linear_coefficient(g));
    }
    if (oracle::has_clique(g, 4)) {
      EXPECT_EQ(v.status, RslStatus::kCertifiedNonlinear);
    }
    if (v.status == RslStatus::kCertifiedNonlinear) {
      EXPECT_TRUE(v.density.has_value() || has_rule(v, "contains-nonlinear-fact"));
    }
    if (v.status == RslStatus::kCertifiedLinear) {
      EXPECT_TRUE(oracle::brute_is_forest(g) || oracle::brute_embeds(g, k4));
    }
    const bool dense = oracle::max_excess(g) && *oracle::max_excess(g) + 2 >= 0;
    EXPECT_EQ(v.status == RslStatus::kCertifiedNonlinear, dense || oracle::has_clique(g, 4));
    EXPECT_TRUE(validate_verdict_json(to_json(v)));
  }
}

// Adding an edge or a vertex keeps a nonlinear verdict; deleting one keeps a
// linear verdict. Single steps generate every sub/supergraph relation.
TEST(Classify, MonotoneOverOrderSix) {
  const KnowledgeBase kb = KnowledgeBase::defaults();
  for (const Graph& g : all_graphs_up_to(6)) {
    SCOPED_TRACE(graph6_encode(g));
    const RslStatus s = classify(g, kb).status;
    std::vector<Graph> up;
    std::vector<Graph> down;
    Graph bigger(g.order() + 1);
    for (const Edge& e : g.edges()) bigger.add_edge(e.u, e.v);
    if (g.order() < 6) up.push_back(bigger);
    for (Vertex u = 0; u < g.order(); ++u) {
      for (Vertex v = u + 1; v < g.order(); ++v) {
        Graph h = g;
        if (g.adjacent(u, v)) {
          h.remove_edge(u, v);
          down.push_back(h);
        } else {
          h.add_edge(u, v);
          up.push_back(h);
        }
      }
      std::vector<Vertex> keep;
      for (Vertex w = 0; w < g.order(); ++w) {
        if (w != u) keep.push_back(w);
      }
      down.push_back(induced_subgraph(g, keep).graph);
    }
    if (s == RslStatus::kCertifiedNonlinear) {
      for (const Graph& h : up) EXPECT_EQ(classify(h, kb).status, RslStatus::kCertifiedNonlinear);
    }
    if (s == RslStatus::kCertifiedLinear) {
      for (const Graph& h : down) EXPECT_EQ(classify(h, kb).status, RslStatus::kCertifiedLinear);
    }
  }
}

// ---------------------------------------------------------------------------
// Knowledge base.

TEST(KnowledgeBase, Defaults) {
  const KnowledgeBase kb = KnowledgeBase::defaults();
  ASSERT_EQ(kb.nonlinear().size(), 1u);
  EXPECT_EQ(kb.nonlinear()[0].code, canonical_code(catalog::complete(4)));
  for (const Fact& f : kb.linear()) {
    EXPECT_TRUE(oracle::brute_embeds(f.graph, catalog::complete(4)));
    EXPECT_FALSE(oracle::has_clique(f.graph, 4));
    EXPECT_FALSE(f.citation.empty());
  }
  EXPECT_TRUE(kb.contains(canonical_code(catalog::complete(3))));
  EXPECT_FALSE(kb.contains(canonical_code(catalog::cycle(5))));
}

TEST(KnowledgeBase, LoadedFactsApply) {
  KnowledgeBase kb = KnowledgeBase::defaults();
  kb.load(nlohmann::json::array(
      {{{"graph6", graph6_encode(catalog::cycle(5))}, {"status", "linear"}, {"citation", "external"}}}));
  const RslVerdict v = classify(catalog::cycle(5), kb);
  EXPECT_EQ(v.status, RslStatus::kCertifiedLinear);
  ASSERT_FALSE(v.rules.empty());
  EXPECT_EQ(v.rules.front().citation, "external");
  EXPECT_EQ(classify(catalog::path(5), kb).status, RslStatus::kCertifiedLinear);
}

TEST(KnowledgeBase, ContradictionsRejected) {
  KnowledgeBase kb = KnowledgeBase::defaults();
  EXPECT_THROW(kb.add(catalog::complete(4), true, "wrong"), InvalidInput);
  EXPECT_THROW(kb.add(catalog::complete(3), false, "wrong"), InvalidInput);
  EXPECT_THROW(kb.load(nlohmann::json::array({{{"graph6", "C~"}, {"status", "linear"}}})), InvalidInput);
  EXPECT_THROW(kb.load(nlohmann::json::array({{{"graph6", "Bw"}, {"status", "maybe"}}})), InvalidInput);
  EXPECT_THROW(kb.load(nlohmann::json::object()), InvalidInput);
  EXPECT_THROW(kb.load(nlohmann::json::array({{{"status", "linear"}}})), InvalidInput);
}

// A fact that makes a dense graph linear is caught at classification.
TEST(KnowledgeBase, InconsistentFactsSurfaceInClassify) {
  KnowledgeBase kb = KnowledgeBase::defaults();
  kb.add(named_graph("W4"), true, "bogus");
  EXPECT_THROW(classify(named_graph("W4"), kb), InconsistentVerdict);
}

// ---------------------------------------------------------------------------
// JSON.

TEST(VerdictJson, Shape) {
  const KnowledgeBase kb = KnowledgeBase::defaults();
  const nlohmann::json k4 = to_json(classify(catalog::complete(4), kb));
  EXPECT_EQ(k4.at("graph"), "C~");
  EXPECT_EQ(k4.at("status"), "CertifiedNonlinear");
  EXPECT_EQ(k4.at("density").at("exponent"), "5/2");
  EXPECT_EQ(k4.at("density").at("slack"), 0);
  const nlohmann::json p4 = to_json(classify(catalog::path(4), kb));
  EXPECT_EQ(p4.at("status"), "CertifiedLinear");
  EXPECT_EQ(p4.at("linear_coefficient"), 7);
  EXPECT_FALSE(to_json(classify(catalog::cycle(5), kb)).contains("density"));
}

TEST(VerdictJson, ValidationCatchesTampering) {
  const KnowledgeBase kb = KnowledgeBase::defaults();
  nlohmann::json j = to_json(classify(named_graph("K2_2_2"), kb));
  ASSERT_TRUE(validate_verdict_json(j));
  nlohmann::json bad = j;
  bad["density"]["slack"] = 7;
  EXPECT_FALSE(validate_verdict_json(bad));
  bad = j;
  bad["density"]["exponent"] = "2/1";
  EXPECT_FALSE(validate_verdict_json(bad));
  bad = j;
  bad["graph"] = graph6_encode(catalog::cycle(6));
  EXPECT_FALSE(validate_verdict_json(bad));
  bad = j;
  bad["status"] = "Maybe";
  EXPECT_FALSE(validate_verdict_json(bad));
}

}  // namespace
}  // namespace rsl
