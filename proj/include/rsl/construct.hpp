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

// High-girth dense graph builders.
//
// Randomness comes from std::mt19937_64 seeded with the user seed. Bounded
// draws use rejection: with t = 2^64 mod n, raw outputs below t are discarded
// and the draw is x mod n. Shuffles are Fisher-Yates from the back
// (j = draw(i + 1) for i = size-1 .. 1). Bernoulli(num/den) is draw(den) < num.

#ifndef RSL_CONSTRUCT_HPP_
#define RSL_CONSTRUCT_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "rsl/graph.hpp"

namespace rsl {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t draw(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
      const std::uint64_t x = engine_();
      if (x >= threshold) return x % bound;
    }
  }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[draw(i)]);
    }
  }

  bool bernoulli(const Rational& p) {
    return draw(static_cast<std::uint64_t>(p.denominator())) <
           static_cast<std::uint64_t>(p.numerator());
  }

 private:
  std::mt19937_64 engine_;
};

enum class BuildMethod { kGreedy, kDeletion };

inline std::string to_string(BuildMethod m) {
  return m == BuildMethod::kGreedy ? "greedy" : "deletion";
}

struct ConstructionStep {
  enum class Kind { kAdd, kRemove };
  Kind kind = Kind::kAdd;
  Edge edge;
  // kAdd: distance between the endpoints before joining; nullopt = different
  // components.
  std::optional<std::size_t> distance;
  // kRemove: the short cycle the edge was taken from, starting at its least
  // vertex.
  std::vector<Vertex> cycle;

  friend bool operator==(const ConstructionStep&, const ConstructionStep&) = default;
};

struct ConstructionStats {
  std::size_t order = 0;
  std::size_t edges = 0;
  Girth girth = Girth::acyclic();
  Rational average_degree;
  std::size_t max_degree = 0;

  friend bool operator==(const ConstructionStats&, const ConstructionStats&) = default;
};

struct ConstructionLog {
  BuildMethod method = BuildMethod::kGreedy;
  std::uint64_t seed = 0;
  std::size_t order = 0;
  std::size_t girth_target = 3;
  std::size_t degree_cap = 0;          // greedy only
  Rational edge_probability{0};        // deletion only
  std::size_t sampled_edges = 0;       // deletion only
  std::vector<ConstructionStep> steps;
  ConstructionStats final_stats;

  friend bool operator==(const ConstructionLog&, const ConstructionLog&) = default;
};

struct Construction {
  Graph graph;
  ConstructionLog log;
};

inline ConstructionStats stats_of(const Graph& g) {
  ConstructionStats s;
  s.order = g.order();
  s.edges = g.size();
  s.girth = girth(g);
  s.average_degree = g.order() ? average_degree(g) : Rational(0);
  s.max_degree = g.max_degree();
  return s;
}

namespace detail {

// True when dist(u, v) <= limit. Meets in the middle: a ball of radius
// ceil(limit/2) around u against one of radius floor(limit/2) around v.
class BoundedDistance {
 public:
  explicit BoundedDistance(std::size_t order)
      : ball_mark_(order, 0), walk_mark_(order, 0), depth_(order, 0) {}

  bool within(const Graph& g, Vertex u, Vertex v, std::size_t limit) {
    if (u == v) return true;
    ++stamp_;
    if (walk(g, u, (limit + 1) / 2, ball_mark_, nullptr)) return true;
    return walk(g, v, limit / 2, walk_mark_, &ball_mark_);
  }

 private:
  // BFS to `radius` stamping `mark`; reports whether any vertex stamped in
  // `target` is reached.
  bool walk(const Graph& g, Vertex root, std::size_t radius, std::vector<std::uint64_t>& mark,
            const std::vector<std::uint64_t>* target) {
    if (target && (*target)[root] == stamp_) return true;
    frontier_.assign(1, root);
    mark[root] = stamp_;
    depth_[root] = 0;
    for (std::size_t head = 0; head < frontier_.size(); ++head) {
      const Vertex x = frontier_[head];
      if (depth_[x] == radius) continue;
      bool hit = false;
      g.for_each_neighbor(x, [&](Vertex y) {
        if (hit || mark[y] == stamp_) return;
        mark[y] = stamp_;
        depth_[y] = depth_[x] + 1;
        if (target && (*target)[y] == stamp_) hit = true;
        frontier_.push_back(y);
      });
      if (hit) return true;
    }
    return false;
  }

  std::vector<std::uint64_t> ball_mark_;
  std::vector<std::uint64_t> walk_mark_;
  std::vector<std::size_t> depth_;
  std::vector<Vertex> frontier_;
  std::uint64_t stamp_ = 0;
};

inline std::vector<Edge> shuffled_pairs(std::size_t order, Rng& rng) {
  std::vector<Edge> pairs;
  pairs.reserve(order * (order - (order ? 1 : 0)) / 2);
  for (Vertex u = 0; u < order; ++u) {
    for (Vertex v = u + 1; v < order; ++v) pairs.push_back({u, v});
  }
  rng.shuffle(pairs);
  return pairs;
}

inline Graph sample_random_graph(std::size_t order, const Rational& p, std::uint64_t seed) {
  Rng rng(seed);
  Graph g(order);
  for (Vertex u = 0; u < order; ++u) {
    for (Vertex v = u + 1; v < order; ++v) {
      if (rng.bernoulli(p)) g.add_edge(u, v);
    }
  }
  return g;
}

// Lexicographically least cycle of length `length` (as a vertex sequence
// starting at its least vertex), searching start vertices in increasing order.
inline std::optional<std::vector<Vertex>> least_cycle_of_length(const Graph& g,
                                                                std::size_t length) {
  const std::size_t n = g.order();
  std::vector<std::size_t> dist(n);
  std::vector<Vertex> path;
  std::vector<bool> on_path(n, false);
  for (Vertex s = 0; s < n; ++s) {
    // Distances from s inside the subgraph on vertices >= s, for pruning.
    constexpr std::size_t kFar = static_cast<std::size_t>(-1);
    std::fill(dist.begin(), dist.end(), kFar);
    std::vector<Vertex> queue{s};
    dist[s] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex x = queue[head];
      g.for_each_neighbor(x, [&](Vertex y) {
        if (y > s && dist[y] == kFar) {
          dist[y] = dist[x] + 1;
          queue.push_back(y);
        }
      });
    }
    path.assign(1, s);
    on_path[s] = true;
    bool found = false;
    auto dfs = [&](auto&& self, Vertex x) -> void {
      if (path.size() == length) {
        if (g.adjacent(x, s)) found = true;
        return;
      }
      g.for_each_neighbor(x, [&](Vertex y) {
        if (found || y <= s || on_path[y]) return;
        // After stepping to y, length - path.size() - 1 steps remain to close.
        if (dist[y] == kFar || dist[y] > length - path.size()) return;
        path.push_back(y);
        on_path[y] = true;
        self(self, y);
        if (!found) {
          on_path[y] = false;
          path.pop_back();
        }
      });
    };
    dfs(dfs, s);
    for (Vertex v : path) on_path[v] = false;
    if (found) return path;
  }
  return std::nullopt;
}

}  // namespace detail

// Joins pairs in a seeded random order while they are at distance >= g
// (different components count) and both endpoints have degree below the cap;
// passes repeat until one adds nothing.
inline Construction greedy_high_girth(std::size_t order, std::size_t g,
                                      std::size_t degree_cap, std::uint64_t seed) {
  if (g < 3) throw InvalidInput("girth target must be at least 3");
  if (degree_cap < 4) throw InvalidInput("degree cap must be at least 4");

  Construction out{Graph(order), {}};
  ConstructionLog& log = out.log;
  log.method = BuildMethod::kGreedy;
  log.seed = seed;
  log.order = order;
  log.girth_target = g;
  log.degree_cap = degree_cap;

  Rng rng(seed);
  const std::vector<Edge> pairs = detail::shuffled_pairs(order, rng);
  detail::BoundedDistance probe(order);
  Graph& graph = out.graph;
  bool added = true;
  while (added) {
    added = false;
    for (const Edge& p : pairs) {
      if (graph.degree(p.u) >= degree_cap || graph.degree(p.v) >= degree_cap) continue;
      if (graph.adjacent(p.u, p.v)) continue;
      if (probe.within(graph, p.u, p.v, g - 1)) continue;
      ConstructionStep step;
      step.kind = ConstructionStep::Kind::kAdd;
      step.edge = p;
      step.distance = distance(graph, p.u, p.v);
      graph.add_edge(p.u, p.v);
      log.steps.push_back(std::move(step));
      added = true;
    }
  }
  log.final_stats = stats_of(graph);
  return out;
}

// Samples G(order, p) and, while a cycle shorter than g remains, deletes the
// least edge of the lexicographically least shortest cycle.
inline Construction deletion_high_girth(std::size_t order, std::size_t g,
                                        const Rational& edge_probability,
                                        std::uint64_t seed) {
  if (g < 3) throw InvalidInput("girth target must be at least 3");
  if (edge_probability <= Rational(0) || edge_probability >= Rational(1)) {
    throw InvalidInput("edge probability must lie strictly between 0 and 1");
  }
  Construction out{detail::sample_random_graph(order, edge_probability, seed), {}};
  ConstructionLog& log = out.log;
  log.method = BuildMethod::kDeletion;
  log.seed = seed;
  log.order = order;
  log.girth_target = g;
  log.edge_probability = edge_probability;
  log.sampled_edges = out.graph.size();

  Graph& graph = out.graph;
  while (true) {
    const Girth current = girth(graph);
    if (current.at_least(g)) break;
    auto cyc = detail::least_cycle_of_length(graph, current.value());
    if (!cyc) throw std::logic_error("shortest cycle vanished");
    Edge victim = Edge::normalized((*cyc)[0], (*cyc)[1]);
    for (std::size_t i = 1; i < cyc->size(); ++i) {
      victim = std::min(victim, Edge::normalized((*cyc)[i], (*cyc)[(i + 1) % cyc->size()]));
    }
    graph.remove_edge(victim.u, victim.v);
    ConstructionStep step;
    step.kind = ConstructionStep::Kind::kRemove;
    step.edge = victim;
    step.cycle = std::move(*cyc);
    log.steps.push_back(std::move(step));
  }
  log.final_stats = stats_of(graph);
  return out;
}

// Rebuilds the graph from the start state (empty, or the seeded sample) and
// the recorded steps. Throws if a step does not apply.
inline Graph replay(const ConstructionLog& log) {
  Graph g = log.method == BuildMethod::kGreedy
                ? Graph(log.order)
                : detail::sample_random_graph(log.order, log.edge_probability, log.seed);
  for (const ConstructionStep& s : log.steps) {
    const bool applied = s.kind == ConstructionStep::Kind::kAdd ? g.add_edge(s.edge.u, s.edge.v)
                                                                : g.remove_edge(s.edge.u, s.edge.v);
    if (!applied) throw InvalidInput("construction log step does not apply");
  }
  return g;
}

inline nlohmann::json girth_json(const Girth& g) {
  if (g.is_acyclic()) return "acyclic";
  return g.value();
}

inline nlohmann::json to_json(const ConstructionLog& log) {
  nlohmann::json params = {{"order", log.order}, {"girth", log.girth_target}};
  if (log.method == BuildMethod::kGreedy) {
    params["cap"] = log.degree_cap;
  } else {
    params["edge_probability"] = to_string(log.edge_probability);
    params["sampled_edges"] = log.sampled_edges;
  }
  nlohmann::json steps = nlohmann::json::array();
  for (const ConstructionStep& s : log.steps) {
    nlohmann::json j = {{"op", s.kind == ConstructionStep::Kind::kAdd ? "add" : "remove"},
                        {"u", s.edge.u},
                        {"v", s.edge.v}};
    if (s.kind == ConstructionStep::Kind::kAdd) {
      j["distance"] = s.distance ? nlohmann::json(*s.distance) : nlohmann::json("unreachable");
    } else {
      j["cycle"] = s.cycle;
    }
    steps.push_back(std::move(j));
  }
  const ConstructionStats& st = log.final_stats;
  return {{"method", to_string(log.method)},
          {"seed", log.seed},
          {"params", std::move(params)},
          {"steps", std::move(steps)},
          {"final_stats",
           {{"order", st.order},
            {"edges", st.edges},
            {"girth", girth_json(st.girth)},
            {"average_degree", to_string(st.average_degree)},
            {"max_degree", st.max_degree}}}};
}

inline Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(text));
    const std::int64_t den = std::stoll(text.substr(slash + 1));
    if (den == 0) throw InvalidInput("zero denominator in '" + text + "'");
    return Rational(std::stoll(text.substr(0, slash)), den);
  } catch (const std::logic_error&) {
    throw InvalidInput("malformed rational '" + text + "'");
  }
}

inline ConstructionLog construction_log_from_json(const nlohmann::json& j) {
  try {
    ConstructionLog log;
    const std::string method = j.at("method");
    if (method == "greedy") {
      log.method = BuildMethod::kGreedy;
    } else if (method == "deletion") {
      log.method = BuildMethod::kDeletion;
    } else {
      throw InvalidInput("unknown construction method '" + method + "'");
    }
    log.seed = j.at("seed");
    const auto& params = j.at("params");
    log.order = params.at("order");
    log.girth_target = params.at("girth");
    if (log.method == BuildMethod::kGreedy) {
      log.degree_cap = params.at("cap");
    } else {
      log.edge_probability = parse_rational(params.at("edge_probability"));
      log.sampled_edges = params.at("sampled_edges");
    }
    for (const auto& s : j.at("steps")) {
      ConstructionStep step;
      step.kind = s.at("op") == "add" ? ConstructionStep::Kind::kAdd
                                      : ConstructionStep::Kind::kRemove;
      step.edge = {s.at("u"), s.at("v")};
      if (step.kind == ConstructionStep::Kind::kAdd) {
        if (s.at("distance").is_number()) step.distance = s.at("distance").get<std::size_t>();
      } else {
        step.cycle = s.at("cycle").get<std::vector<Vertex>>();
      }
      log.steps.push_back(std::move(step));
    }
    const auto& st = j.at("final_stats");
    log.final_stats.order = st.at("order");
    log.final_stats.edges = st.at("edges");
    log.final_stats.girth = st.at("girth").is_number()
                                ? Girth::finite(st.at("girth").get<std::size_t>())
                                : Girth::acyclic();
    log.final_stats.average_degree = parse_rational(st.at("average_degree"));
    log.final_stats.max_degree = st.at("max_degree");
    return log;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed construction log: ") + e.what());
  }
}

}  // namespace rsl

#endif  // RSL_CONSTRUCT_HPP_
