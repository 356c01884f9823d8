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

// Density machinery for the condition e(S) >= 2|S| - 2 on vertex sets with at
// least three vertices.
//
// Slack of a vertex set S is e(S) - (2|S| - 2). A graph contains a set with
// slack >= 0 exactly when its edge set violates (2,3)-sparsity (some nonempty
// edge subset F spans more than 2|V(F)| - 3 edges), which the pebble game
// decides in polynomial time. The exact slack maximizer is exhaustive for small
// orders and a max-closure min-cut otherwise.

#ifndef RSL_DENSITY_HPP_
#define RSL_DENSITY_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <vector>

#include "rsl/graph.hpp"

namespace rsl {

inline std::int64_t slack_of(std::size_t vertices, std::size_t edges) {
  return static_cast<std::int64_t>(edges) - (2 * static_cast<std::int64_t>(vertices) - 2);
}

struct DenseSet {
  std::vector<Vertex> vertices;  // sorted
  std::size_t edges = 0;
  std::int64_t slack = 0;
};

// (2,3)-pebble game. Each vertex starts with two pebbles; an edge is accepted
// when four pebbles can be gathered on its endpoints.
class PebbleGame {
 public:
  explicit PebbleGame(std::size_t order)
      : pebbles_(order, 2), out_(order), mark_(order, 0), parent_(order, 0) {}

  bool insert(Vertex u, Vertex v) {
    while (pebbles_[u] < 2 && gather(u, v)) {}
    while (pebbles_[v] < 2 && gather(v, u)) {}
    if (pebbles_[u] + pebbles_[v] < 4) return false;
    out_[u].push_back(v);
    --pebbles_[u];
    return true;
  }

 private:
  // Moves a free pebble onto `root` along a directed path avoiding `blocked`.
  bool gather(Vertex root, Vertex blocked) {
    ++stamp_;
    mark_[root] = stamp_;
    mark_[blocked] = stamp_;
    std::vector<Vertex> stack{root};
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : out_[x]) {
        if (mark_[y] == stamp_) continue;
        mark_[y] = stamp_;
        parent_[y] = x;
        if (pebbles_[y] > 0) {
          // Reverse the path root -> ... -> y.
          Vertex cur = y;
          while (cur != root) {
            const Vertex prev = parent_[cur];
            auto& edges = out_[prev];
            edges.erase(std::find(edges.begin(), edges.end(), cur));
            out_[cur].push_back(prev);
            cur = prev;
          }
          --pebbles_[y];
          ++pebbles_[root];
          return true;
        }
        stack.push_back(y);
      }
    }
    return false;
  }

  std::vector<int> pebbles_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::uint64_t> mark_;
  std::vector<Vertex> parent_;
  std::uint64_t stamp_ = 0;
};

inline bool is_sparse_edge_set(std::size_t order, std::span<const Edge> edges) {
  PebbleGame game(order);
  for (const Edge& e : edges) {
    if (!game.insert(e.u, e.v)) return false;
  }
  return true;
}

// True iff some vertex set S with |S| >= 3 has e(S) >= 2|S| - 2.
inline bool has_dense_subgraph(const Graph& g) {
  const auto edges = g.edges();
  return !is_sparse_edge_set(g.order(), edges);
}

// An inclusion-minimal dense edge set (sorted), or nullopt when g is sparse.
inline std::optional<std::vector<Edge>> find_dense_circuit(const Graph& g) {
  const auto edges = g.edges();
  PebbleGame game(g.order());
  std::vector<Edge> current;
  bool dependent = false;
  for (const Edge& e : edges) {
    current.push_back(e);
    if (!game.insert(e.u, e.v)) {
      dependent = true;
      break;
    }
  }
  if (!dependent) return std::nullopt;
  // Drop edges while the set stays dependent; the survivor is a circuit.
  for (std::size_t i = 0; i < current.size();) {
    std::vector<Edge> trial = current;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
    if (!is_sparse_edge_set(g.order(), trial)) {
      current.swap(trial);
    } else {
      ++i;
    }
  }
  std::sort(current.begin(), current.end());
  return current;
}

namespace detail {

inline constexpr std::size_t kExhaustiveDensityOrder = 20;

// Exhaustive maximizer over vertex subsets with |S| >= 3, walked in Gray-code
// order. Ties prefer fewer vertices, then the numerically smallest mask.
inline std::optional<DenseSet> max_slack_exhaustive(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 3) return std::nullopt;
  std::uint64_t mask = 0;
  std::size_t edges = 0;
  std::int64_t best_slack = std::numeric_limits<std::int64_t>::min();
  std::uint64_t best_mask = 0;
  std::size_t best_edges = 0;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t step = 1; step < total; ++step) {
    const int flip = std::countr_zero(step);
    const std::uint64_t bit = std::uint64_t{1} << flip;
    if (mask & bit) {
      mask ^= bit;
      edges -= static_cast<std::size_t>(std::popcount(g.row64(static_cast<Vertex>(flip)) & mask));
    } else {
      edges += static_cast<std::size_t>(std::popcount(g.row64(static_cast<Vertex>(flip)) & mask));
      mask ^= bit;
    }
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size < 3) continue;
    const std::int64_t s = slack_of(size, edges);
    const auto best_size = std::popcount(best_mask);
    if (s > best_slack ||
        (s == best_slack && (static_cast<int>(size) < best_size ||
                             (static_cast<int>(size) == best_size && mask < best_mask)))) {
      best_slack = s;
      best_mask = mask;
      best_edges = edges;
    }
  }
  DenseSet out;
  for (std::uint64_t m = best_mask; m; m &= m - 1) {
    out.vertices.push_back(static_cast<Vertex>(std::countr_zero(m)));
  }
  out.edges = best_edges;
  out.slack = best_slack;
  return out;
}

// Dinic max-flow on a small network.
class FlowNetwork {
 public:
  explicit FlowNetwork(std::size_t nodes) : adj_(nodes), level_(nodes), it_(nodes) {}

  void add_arc(std::size_t from, std::size_t to, std::int64_t cap) {
    adj_[from].push_back(arcs_.size());
    arcs_.push_back({to, cap});
    adj_[to].push_back(arcs_.size());
    arcs_.push_back({from, 0});
  }

  std::int64_t max_flow(std::size_t s, std::size_t t) {
    std::int64_t flow = 0;
    while (bfs(s, t)) {
      std::fill(it_.begin(), it_.end(), 0);
      while (std::int64_t f = dfs(s, t, std::numeric_limits<std::int64_t>::max())) flow += f;
    }
    return flow;
  }

  // Nodes reachable from s in the residual network (after max_flow).
  std::vector<bool> source_side(std::size_t s) const {
    std::vector<bool> seen(adj_.size(), false);
    std::vector<std::size_t> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const auto x = stack.back();
      stack.pop_back();
      for (auto a : adj_[x]) {
        if (arcs_[a].cap > 0 && !seen[arcs_[a].to]) {
          seen[arcs_[a].to] = true;
          stack.push_back(arcs_[a].to);
        }
      }
    }
    return seen;
  }

 private:
  struct Arc {
    std::size_t to;
    std::int64_t cap;
  };

  bool bfs(std::size_t s, std::size_t t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<std::size_t> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const auto x = q.front();
      q.pop();
      for (auto a : adj_[x]) {
        if (arcs_[a].cap > 0 && level_[arcs_[a].to] < 0) {
          level_[arcs_[a].to] = level_[x] + 1;
          q.push(arcs_[a].to);
        }
      }
    }
    return level_[t] >= 0;
  }

  std::int64_t dfs(std::size_t x, std::size_t t, std::int64_t limit) {
    if (x == t) return limit;
    for (auto& i = it_[x]; i < adj_[x].size(); ++i) {
      const auto a = adj_[x][i];
      const auto to = arcs_[a].to;
      if (arcs_[a].cap <= 0 || level_[to] != level_[x] + 1) continue;
      if (std::int64_t f = dfs(to, t, std::min(limit, arcs_[a].cap))) {
        arcs_[a].cap -= f;
        arcs_[a ^ 1].cap += f;
        return f;
      }
    }
    return 0;
  }

  std::vector<Arc> arcs_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<int> level_;
  std::vector<std::size_t> it_;
};

// Max over S containing both endpoints of `forced` of e(S) - 2|S|, as a
// max-weight closure: edge nodes weigh +1, vertex nodes -2 (0 when forced).
inline DenseSet max_slack_with_edge(const Graph& g, std::span<const Edge> edges,
                                    const Edge& forced) {
  const std::size_t m = edges.size();
  const std::size_t n = g.order();
  const std::size_t source = m + n;
  const std::size_t sink = source + 1;
  FlowNetwork net(m + n + 2);
  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
  for (std::size_t i = 0; i < m; ++i) {
    net.add_arc(source, i, 1);
    net.add_arc(i, m + edges[i].u, kInf);
    net.add_arc(i, m + edges[i].v, kInf);
  }
  for (Vertex v = 0; v < n; ++v) {
    if (v != forced.u && v != forced.v) net.add_arc(m + v, sink, 2);
  }
  net.max_flow(source, sink);
  const auto side = net.source_side(source);
  DenseSet out;
  for (Vertex v = 0; v < n; ++v) {
    if (side[m + v] || v == forced.u || v == forced.v) out.vertices.push_back(v);
  }
  for (const Edge& e : edges) {
    if (std::binary_search(out.vertices.begin(), out.vertices.end(), e.u) &&
        std::binary_search(out.vertices.begin(), out.vertices.end(), e.v)) {
      ++out.edges;
    }
  }
  out.slack = slack_of(out.vertices.size(), out.edges);
  return out;
}

// Exact maximizer via one min-cut per edge; every set of size >= 3 that can
// beat an edgeless set contains an edge.
inline std::optional<DenseSet> max_slack_flow(const Graph& g) {
  if (g.order() < 3) return std::nullopt;
  const auto edges = g.edges();
  std::optional<DenseSet> best;
  for (const Edge& e : edges) {
    DenseSet cand = max_slack_with_edge(g, edges, e);
    if (cand.vertices.size() < 3) continue;
    if (!best || cand.slack > best->slack ||
        (cand.slack == best->slack && cand.vertices.size() < best->vertices.size())) {
      best = std::move(cand);
    }
  }
  if (!best) {
    // Edgeless or every edge-containing set has two vertices only; fall back
    // to three vertices carrying as many edges as possible.
    DenseSet out;
    out.vertices = {0, 1, 2};
    if (!edges.empty()) {
      const Edge& e = edges.front();
      out.vertices = {e.u, e.v};
      for (Vertex v = 0; v < g.order() && out.vertices.size() < 3; ++v) {
        if (v != e.u && v != e.v) out.vertices.push_back(v);
      }
      std::sort(out.vertices.begin(), out.vertices.end());
    }
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = i + 1; j < 3; ++j) {
        if (g.adjacent(out.vertices[i], out.vertices[j])) ++out.edges;
      }
    }
    out.slack = slack_of(3, out.edges);
    best = out;
  }
  return best;
}

}  // namespace detail

// Vertex set with |S| >= 3 maximizing e(S) - (2|S| - 2); nullopt below order 3.
inline std::optional<DenseSet> max_slack_set(const Graph& g) {
  if (g.order() <= detail::kExhaustiveDensityOrder) return detail::max_slack_exhaustive(g);
  return detail::max_slack_flow(g);
}

}  // namespace rsl

#endif  // RSL_DENSITY_HPP_
