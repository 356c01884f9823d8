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

#ifndef RSL_GRAPH_HPP_
#define RSL_GRAPH_HPP_

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

namespace rsl {

using Vertex = std::uint32_t;
using Rational = boost::rational<std::int64_t>;

// Thrown for malformed user input: bad vertex ids, bad parameters, bad files.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  // Endpoints ordered so that u < v.
  static Edge normalized(Vertex a, Vertex b) {
    return a < b ? Edge{a, b} : Edge{b, a};
  }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// Labeled simple undirected graph on vertices 0..order-1. Each row of the
// adjacency matrix is a packed bitset, so neighborhood intersections on small
// graphs are a handful of word operations.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t order)
      : order_(order),
        words_((order + 63) / 64),
        bits_(order * words_, 0),
        degree_(order, 0) {}

  static Graph from_edge_list(std::size_t order, std::span<const Edge> edges) {
    Graph g(order);
    for (const Edge& e : edges) {
      if (e.u >= order || e.v >= order) {
        throw InvalidInput("edge endpoint out of range: (" +
                           std::to_string(e.u) + "," + std::to_string(e.v) +
                           ") in graph of order " + std::to_string(order));
      }
      if (e.u == e.v) {
        throw InvalidInput("self-loop at vertex " + std::to_string(e.u));
      }
      g.add_edge(e.u, e.v);
    }
    return g;
  }
  static Graph from_edge_list(std::size_t order,
                              std::initializer_list<Edge> edges) {
    return from_edge_list(order, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t order() const { return order_; }
  std::size_t size() const { return edge_count_; }
  std::size_t words_per_row() const { return words_; }

  bool adjacent(Vertex u, Vertex v) const {
    return (bits_[u * words_ + v / 64] >> (v % 64)) & 1U;
  }
  std::size_t degree(Vertex v) const { return degree_[v]; }

  std::span<const std::uint64_t> row(Vertex v) const {
    return {bits_.data() + v * words_, words_};
  }
  // Neighborhood as a single word; only meaningful when order() <= 64.
  std::uint64_t row64(Vertex v) const { return words_ ? bits_[v * words_] : 0; }

  // Returns true if the edge was absent before.
  bool add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
    if (adjacent(u, v)) return false;
    bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
    bits_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
    ++degree_[u];
    ++degree_[v];
    ++edge_count_;
    return true;
  }

  bool remove_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v || !adjacent(u, v)) return false;
    bits_[u * words_ + v / 64] &= ~(std::uint64_t{1} << (v % 64));
    bits_[v * words_ + u / 64] &= ~(std::uint64_t{1} << (u % 64));
    --degree_[u];
    --degree_[v];
    --edge_count_;
    return true;
  }

  template <typename Fn>
  void for_each_neighbor(Vertex v, Fn&& fn) const {
    const std::uint64_t* r = bits_.data() + v * words_;
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t word = r[w];
      while (word) {
        const int bit = std::countr_zero(word);
        word &= word - 1;
        fn(static_cast<Vertex>(w * 64 + bit));
      }
    }
  }

  std::vector<Vertex> neighbors(Vertex v) const {
    std::vector<Vertex> out;
    out.reserve(degree_[v]);
    for_each_neighbor(v, [&](Vertex w) { out.push_back(w); });
    return out;
  }

  // Sorted list of edges with u < v.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order_; ++u) {
      for_each_neighbor(u, [&](Vertex w) {
        if (u < w) out.push_back({u, w});
      });
    }
    return out;
  }

  std::size_t max_degree() const {
    return degree_.empty() ? 0 : *std::max_element(degree_.begin(), degree_.end());
  }
  std::size_t min_degree() const {
    return degree_.empty() ? 0 : *std::min_element(degree_.begin(), degree_.end());
  }

  void check_vertex(Vertex v) const {
    if (v >= order_) {
      throw InvalidInput("vertex " + std::to_string(v) +
                         " out of range for graph of order " +
                         std::to_string(order_));
    }
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order_ == b.order_ && a.bits_ == b.bits_;
  }

 private:
  std::size_t order_ = 0;
  std::size_t words_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::size_t> degree_;
};

// Shortest-cycle length, or the Acyclic marker for forests.
class Girth {
 public:
  static Girth acyclic() { return Girth(); }
  static Girth finite(std::size_t length) { return Girth(length); }

  bool is_acyclic() const { return !length_; }
  std::size_t value() const { return length_.value(); }

  // Acyclic counts as at least any bound.
  bool at_least(std::size_t bound) const { return !length_ || *length_ >= bound; }

  std::string to_string() const {
    return length_ ? std::to_string(*length_) : std::string("acyclic");
  }
  friend bool operator==(const Girth&, const Girth&) = default;

 private:
  Girth() = default;
  explicit Girth(std::size_t length) : length_(length) {}
  std::optional<std::size_t> length_;
};

inline Girth girth(const Graph& g) {
  const std::size_t n = g.order();
  std::size_t best = std::numeric_limits<std::size_t>::max();
  constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(n);
  std::vector<Vertex> parent(n);
  std::vector<Vertex> queue;
  queue.reserve(n);
  for (Vertex root = 0; root < n && best > 3; ++root) {
    std::fill(dist.begin(), dist.end(), kUnseen);
    queue.clear();
    dist[root] = 0;
    parent[root] = root;
    queue.push_back(root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      if (2 * dist[u] >= best) break;
      g.for_each_neighbor(u, [&](Vertex w) {
        if (dist[w] == kUnseen) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      });
    }
  }
  if (best == std::numeric_limits<std::size_t>::max()) return Girth::acyclic();
  return Girth::finite(best);
}

inline bool is_forest(const Graph& g) { return girth(g).is_acyclic(); }

inline Rational average_degree(const Graph& g) {
  if (g.order() == 0) throw InvalidInput("average degree of the empty graph");
  return Rational(static_cast<std::int64_t>(2 * g.size()),
                  static_cast<std::int64_t>(g.order()));
}

// Hop count between two vertices; nullopt when they are in different
// components.
inline std::optional<std::size_t> distance(const Graph& g, Vertex from, Vertex to) {
  g.check_vertex(from);
  g.check_vertex(to);
  if (from == to) return 0;
  std::vector<std::size_t> dist(g.order(), std::numeric_limits<std::size_t>::max());
  std::deque<Vertex> queue{from};
  dist[from] = 0;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    bool found = false;
    g.for_each_neighbor(u, [&](Vertex w) {
      if (dist[w] != std::numeric_limits<std::size_t>::max()) return;
      dist[w] = dist[u] + 1;
      if (w == to) found = true;
      queue.push_back(w);
    });
    if (found) return dist[to];
  }
  return std::nullopt;
}

// Connected component index per vertex, numbered in order of smallest member.
inline std::vector<std::size_t> components(const Graph& g) {
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> comp(g.order(), kNone);
  std::size_t next = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (comp[s] != kNone) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      g.for_each_neighbor(u, [&](Vertex w) {
        if (comp[w] == kNone) {
          comp[w] = next;
          stack.push_back(w);
        }
      });
    }
    ++next;
  }
  return comp;
}

inline bool is_connected(const Graph& g) {
  const auto comp = components(g);
  return std::all_of(comp.begin(), comp.end(), [](std::size_t c) { return c == 0; });
}

inline bool has_isolated_vertex(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) return true;
  }
  return false;
}

// A graph together with the source vertex each of its vertices came from.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> origin;
};

// Induced subgraph on `keep`, re-indexed in the order given.
inline Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  Subgraph out{Graph(keep.size()), std::vector<Vertex>(keep.begin(), keep.end())};
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = i + 1; j < keep.size(); ++j) {
      if (g.adjacent(keep[i], keep[j])) {
        out.graph.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  return out;
}

// Drops isolated vertices, keeping relative order.
inline Subgraph without_isolated(const Graph& g) {
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) > 0) keep.push_back(v);
  }
  return induced_subgraph(g, keep);
}

// The k-core: repeatedly strip vertices of degree < k.
inline Subgraph k_core(const Graph& g, std::size_t k) {
  Graph work = g;
  std::vector<bool> removed(g.order(), false);
  std::vector<Vertex> stack;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (work.degree(v) < k) {
      removed[v] = true;
      stack.push_back(v);
    }
  }
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : work.neighbors(v)) {
      work.remove_edge(v, w);
      if (!removed[w] && work.degree(w) < k) {
        removed[w] = true;
        stack.push_back(w);
      }
    }
  }
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!removed[v]) keep.push_back(v);
  }
  return induced_subgraph(g, keep);
}

inline Graph relabeled(const Graph& g, std::span<const Vertex> perm) {
  Graph out(g.order());
  for (const Edge& e : g.edges()) out.add_edge(perm[e.u], perm[e.v]);
  return out;
}

// Number of edges of g inside the vertex set `mask` (order <= 64).
inline std::size_t edges_within(const Graph& g, std::uint64_t mask) {
  std::size_t twice = 0;
  for (std::uint64_t m = mask; m; m &= m - 1) {
    twice += std::popcount(g.row64(static_cast<Vertex>(std::countr_zero(m))) & mask);
  }
  return twice / 2;
}

}  // namespace rsl

#endif  // RSL_GRAPH_HPP_
