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

// Three-valued Ramsey size-linearity certification.
//
// Rules, in the order they are tried:
//   forest                   every forest is size-linear (tree bound below)
//   subgraph-of-linear-fact  size-linearity passes to subgraphs
//   density                  some subgraph has e >= 2v - 2 (v >= 3), which
//                            forces r(G, K_n) to grow faster than n^2
//   contains-nonlinear-fact  non-linearity passes to supergraphs

#ifndef RSL_CERTIFY_HPP_
#define RSL_CERTIFY_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rsl/canonical.hpp"
#include "rsl/catalog.hpp"
#include "rsl/density.hpp"
#include "rsl/embedding.hpp"
#include "rsl/enumerate.hpp"
#include "rsl/graph.hpp"
#include "rsl/graph6.hpp"

namespace rsl {

// ---------------------------------------------------------------------------
// Closed-form bounds.

// r(T, K_n) for a tree on tree_order vertices.
inline std::int64_t chvatal_tree_ramsey(std::int64_t tree_order, std::int64_t n) {
  if (tree_order < 1 || n < 1) throw InvalidInput("tree order and n must be positive");
  return (tree_order - 1) * (n - 1) + 1;
}

// Upper bound on r(K_3, H).
inline std::int64_t sidorenko_bound(const Graph& h) {
  if (has_isolated_vertex(h)) throw InvalidInput("H must have no isolated vertices");
  return 2 * static_cast<std::int64_t>(h.size()) + 1;
}

// Upper bound on r(T, H) for a forest T: H sits inside K_{2e(H)}, and T inside
// a spanning tree T' of the same order, so r(T, H) <= r(T', K_{2e(H)}).
inline std::int64_t forest_linear_bound(const Graph& t, const Graph& h) {
  if (!is_forest(t)) throw InvalidInput("T must be a forest");
  if (t.order() == 0) throw InvalidInput("T must have at least one vertex");
  if (has_isolated_vertex(h) || h.size() == 0) {
    throw InvalidInput("H must have edges and no isolated vertices");
  }
  return chvatal_tree_ramsey(static_cast<std::int64_t>(t.order()),
                             2 * static_cast<std::int64_t>(h.size()));
}

// Constant C with forest_linear_bound(T, H) <= C * e(H) for every e(H) >= 1.
inline std::int64_t forest_linear_coefficient(const Graph& t) {
  const auto v = static_cast<std::int64_t>(std::max<std::size_t>(t.order(), 1));
  return 2 * (v - 1) + 1;
}

// (e - 1) / (v - 2).
inline Rational lll_exponent(const Graph& g) {
  if (g.order() < 3) throw InvalidInput("exponent undefined below three vertices");
  return Rational(static_cast<std::int64_t>(g.size()) - 1,
                  static_cast<std::int64_t>(g.order()) - 2);
}

// ---------------------------------------------------------------------------
// Density certificates.

struct DensityCertificate {
  Graph witness;
  Embedding embedding;  // witness vertex i sits at embedding[i] in the source
  std::int64_t slack = 0;
  Rational exponent;
};

inline DensityCertificate certificate_for(Graph witness, Embedding embedding) {
  DensityCertificate cert;
  cert.slack = slack_of(witness.order(), witness.size());
  cert.exponent = lll_exponent(witness);
  cert.witness = std::move(witness);
  cert.embedding = std::move(embedding);
  return cert;
}

// A subgraph maximizing e(H) - 2v(H) over v(H) >= 3, when that maximum has
// nonnegative slack.
inline std::optional<DensityCertificate> density_certificate(const Graph& g) {
  const auto best = max_slack_set(g);
  if (!best || best->slack < 0) return std::nullopt;
  Subgraph sub = induced_subgraph(g, best->vertices);
  return certificate_for(std::move(sub.graph), std::move(sub.origin));
}

inline bool validate_certificate(const Graph& source, const DensityCertificate& cert) {
  if (cert.witness.order() < 3) return false;
  if (!is_valid_embedding(cert.witness, source, cert.embedding)) return false;
  if (cert.slack != slack_of(cert.witness.order(), cert.witness.size())) return false;
  if (cert.slack < 0) return false;
  return cert.exponent == lll_exponent(cert.witness) && cert.exponent > Rational(2);
}

// ---------------------------------------------------------------------------
// Knowledge base.

enum class RslStatus { kCertifiedLinear, kCertifiedNonlinear, kUnknown };

inline std::string to_string(RslStatus s) {
  switch (s) {
    case RslStatus::kCertifiedLinear: return "CertifiedLinear";
    case RslStatus::kCertifiedNonlinear: return "CertifiedNonlinear";
    default: return "Unknown";
  }
}

struct Fact {
  Graph graph;
  CanonicalCode code;
  std::string citation;
};

class KnowledgeBase {
 public:
  // Size-linear: K_3 and every proper subgraph of K_4. Not size-linear: K_4.
  // Forests are handled by rule rather than listed.
  static KnowledgeBase defaults() {
    KnowledgeBase kb;
    kb.add(catalog::complete(3), true, "Sidorenko: r(K3,H) <= 2e(H)+1");
    const CanonicalCode k4 = canonical_code(catalog::complete(4));
    for (const Graph& g : all_graphs_up_to(4)) {
      const CanonicalCode code = canonical_code(g);
      if (code == k4 || kb.contains(code)) continue;
      kb.add(g, true, "every proper subgraph of K4 is size-linear");
    }
    kb.add(catalog::complete(4), false, "r(K4,Kn) grows faster than n^2");
    return kb;
  }

  // Throws if the same class is already recorded with the opposite status.
  void add(const Graph& g, bool linear, std::string citation) {
    CanonicalCode code = canonical_code(g);
    auto& same = linear ? linear_ : nonlinear_;
    const auto& other = linear ? nonlinear_ : linear_;
    if (find(other, code)) {
      throw InvalidInput("fact " + graph6_encode(g) + " contradicts an existing fact");
    }
    if (find(same, code)) return;
    same.push_back({canonical_form(g), std::move(code), std::move(citation)});
  }

  // Facts file: JSON array of {graph6, status, citation}; status is "linear"
  // or "nonlinear" (the verdict spellings are accepted too).
  void load(const nlohmann::json& facts) {
    if (!facts.is_array()) throw InvalidInput("facts file must hold a JSON array");
    for (const auto& f : facts) {
      try {
        const std::string status = f.at("status");
        bool linear;
        if (status == "linear" || status == "CertifiedLinear") {
          linear = true;
        } else if (status == "nonlinear" || status == "CertifiedNonlinear") {
          linear = false;
        } else {
          throw InvalidInput("unknown fact status '" + status + "'");
        }
        add(graph6_decode(f.at("graph6").get<std::string>()), linear,
            f.value("citation", std::string("user supplied")));
      } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("malformed fact entry: ") + e.what());
      }
    }
  }

  const std::vector<Fact>& linear() const { return linear_; }
  const std::vector<Fact>& nonlinear() const { return nonlinear_; }

  bool contains(const CanonicalCode& code) const {
    return find(linear_, code) || find(nonlinear_, code);
  }

 private:
  static const Fact* find(const std::vector<Fact>& facts, const CanonicalCode& code) {
    for (const Fact& f : facts) {
      if (f.code == code) return &f;
    }
    return nullptr;
  }

  std::vector<Fact> linear_;
  std::vector<Fact> nonlinear_;
};

// ---------------------------------------------------------------------------
// Classification.

struct RuleApplication {
  std::string rule;
  std::string citation;
  std::optional<Graph> reference;    // the KB fact involved, if any
  std::optional<Embedding> embedding;  // smaller graph into larger one
};

struct RuleSet {
  std::vector<RuleApplication> linear;
  std::vector<RuleApplication> nonlinear;
  std::optional<std::int64_t> linear_coefficient;
  std::optional<DensityCertificate> density;
};

// Every rule that fires for g, without resolving conflicts.
inline RuleSet applicable_rules(const Graph& g, const KnowledgeBase& kb) {
  RuleSet out;
  if (is_forest(g)) {
    out.linear.push_back({"forest", "every forest is size-linear (tree bound via K_{2e(H)})",
                          std::nullopt, std::nullopt});
    out.linear_coefficient = forest_linear_coefficient(g);
  }
  for (const Fact& f : kb.linear()) {
    if (auto map = subgraph_embedding(g, f.graph)) {
      out.linear.push_back({"subgraph-of-linear-fact", f.citation, f.graph, std::move(map)});
    }
  }
  if (auto cert = density_certificate(g)) {
    out.nonlinear.push_back({"density", "e(H) >= 2v(H)-2 implies not size-linear",
                             std::nullopt, cert->embedding});
    out.density = std::move(cert);
  }
  for (const Fact& f : kb.nonlinear()) {
    if (auto map = subgraph_embedding(f.graph, g)) {
      out.nonlinear.push_back({"contains-nonlinear-fact", f.citation, f.graph, std::move(map)});
    }
  }
  return out;
}

struct RslVerdict {
  Graph graph;
  RslStatus status = RslStatus::kUnknown;
  std::vector<RuleApplication> rules;
  std::optional<std::int64_t> linear_coefficient;
  std::optional<DensityCertificate> density;
};

class InconsistentVerdict : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline RslVerdict classify(const Graph& g, const KnowledgeBase& kb) {
  RuleSet rules = applicable_rules(g, kb);
  if (!rules.linear.empty() && !rules.nonlinear.empty()) {
    throw InconsistentVerdict("both size-linear and non-linear rules fire for " +
                              (g.order() <= kGraph6MaxOrder ? graph6_encode(g) : std::string("graph")));
  }
  RslVerdict v;
  v.graph = g;
  if (!rules.linear.empty()) {
    v.status = RslStatus::kCertifiedLinear;
    v.rules = std::move(rules.linear);
    v.linear_coefficient = rules.linear_coefficient;
  } else if (!rules.nonlinear.empty()) {
    v.status = RslStatus::kCertifiedNonlinear;
    v.rules = std::move(rules.nonlinear);
    v.density = std::move(rules.density);
  }
  return v;
}

// ---------------------------------------------------------------------------
// JSON.

inline nlohmann::json to_json(const DensityCertificate& c) {
  return {{"witness", graph6_encode(c.witness)},
          {"embedding", c.embedding},
          {"slack", c.slack},
          {"exponent", to_string(c.exponent)}};
}

inline nlohmann::json to_json(const RslVerdict& v) {
  nlohmann::json rules = nlohmann::json::array();
  for (const RuleApplication& r : v.rules) {
    nlohmann::json j = {{"rule", r.rule}, {"citation", r.citation}};
    if (r.reference) j["reference"] = graph6_encode(*r.reference);
    if (r.embedding) j["embedding"] = *r.embedding;
    rules.push_back(std::move(j));
  }
  nlohmann::json out = {{"graph", graph6_encode(v.graph)},
                        {"status", to_string(v.status)},
                        {"rules", std::move(rules)}};
  if (v.linear_coefficient) out["linear_coefficient"] = *v.linear_coefficient;
  if (v.density) out["density"] = to_json(*v.density);
  return out;
}

// Re-checks a serialized verdict's density certificate against its graph.
inline bool validate_verdict_json(const nlohmann::json& j) {
  try {
    const Graph g = graph6_decode(j.at("graph").get<std::string>());
    if (j.contains("density")) {
      const auto& d = j.at("density");
      DensityCertificate cert;
      cert.witness = graph6_decode(d.at("witness").get<std::string>());
      cert.embedding = d.at("embedding").get<Embedding>();
      cert.slack = d.at("slack");
      const std::string exponent = d.at("exponent");
      const auto slash = exponent.find('/');
      if (slash == std::string::npos) return false;
      cert.exponent = Rational(std::stoll(exponent.substr(0, slash)),
                               std::stoll(exponent.substr(slash + 1)));
      if (!validate_certificate(g, cert)) return false;
    }
    const std::string status = j.at("status");
    if (status == "CertifiedLinear" && j.at("rules").empty()) return false;
    return status == "CertifiedLinear" || status == "CertifiedNonlinear" || status == "Unknown";
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace rsl

#endif  // RSL_CERTIFY_HPP_
