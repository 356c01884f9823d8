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

#ifndef RSL_EMBEDDING_HPP_
#define RSL_EMBEDDING_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <unordered_set>
#include <vector>

#include "rsl/graph.hpp"

namespace rsl {

// pattern vertex i maps to host vertex map[i].
using Embedding = std::vector<Vertex>;

namespace detail {

class EmbeddingSearch {
 public:
  EmbeddingSearch(const Graph& pattern, const Graph& host)
      : pattern_(pattern), host_(host), words_(host.words_per_row()) {}

  std::optional<Embedding> run() {
    const std::size_t k = pattern_.order();
    if (k > host_.order()) return std::nullopt;
    if (pattern_.size() > host_.size()) return std::nullopt;
    plan();
    image_.assign(k, 0);
    used_.assign(words_, 0);
    if (extend(0)) return image_;
    return std::nullopt;
  }

 private:
  // Visit order: highest degree first, then greedily the vertex with the most
  // already-placed neighbors.
  void plan() {
    const std::size_t k = pattern_.order();
    std::vector<bool> placed(k, false);
    std::vector<std::size_t> links(k, 0);
    order_.clear();
    for (std::size_t step = 0; step < k; ++step) {
      Vertex best = 0;
      bool have = false;
      for (Vertex v = 0; v < k; ++v) {
        if (placed[v]) continue;
        if (!have || links[v] > links[best] ||
            (links[v] == links[best] && pattern_.degree(v) > pattern_.degree(best))) {
          best = v;
          have = true;
        }
      }
      placed[best] = true;
      order_.push_back(best);
      pattern_.for_each_neighbor(best, [&](Vertex w) { ++links[w]; });
    }
    position_.assign(k, 0);
    for (std::size_t i = 0; i < k; ++i) position_[order_[i]] = i;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex p = order_[depth];
    // Candidates: unused host vertices adjacent to every placed neighbor image.
    std::vector<std::uint64_t> cand(words_, ~std::uint64_t{0});
    if (host_.order() % 64) cand[words_ - 1] = (std::uint64_t{1} << (host_.order() % 64)) - 1;
    for (std::size_t w = 0; w < words_; ++w) cand[w] &= ~used_[w];
    pattern_.for_each_neighbor(p, [&](Vertex q) {
      if (position_[q] < depth) {
        auto r = host_.row(image_[q]);
        for (std::size_t w = 0; w < words_; ++w) cand[w] &= r[w];
      }
    });
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t word = cand[w];
      while (word) {
        const auto h = static_cast<Vertex>(w * 64 + std::countr_zero(word));
        word &= word - 1;
        if (host_.degree(h) < pattern_.degree(p)) continue;
        image_[p] = h;
        used_[h / 64] |= std::uint64_t{1} << (h % 64);
        if (extend(depth + 1)) return true;
        used_[h / 64] &= ~(std::uint64_t{1} << (h % 64));
      }
    }
    return false;
  }

  const Graph& pattern_;
  const Graph& host_;
  std::size_t words_;
  std::vector<Vertex> order_;
  std::vector<std::size_t> position_;
  Embedding image_;
  std::vector<std::uint64_t> used_;
};

}  // namespace detail

// Injective vertex map carrying every pattern edge onto a host edge (not
// necessarily induced), or nullopt when pattern is not a subgraph of host.
inline std::optional<Embedding> subgraph_embedding(const Graph& pattern, const Graph& host) {
  return detail::EmbeddingSearch(pattern, host).run();
}

inline bool is_subgraph(const Graph& pattern, const Graph& host) {
  return subgraph_embedding(pattern, host).has_value();
}

// Checks that `map` is injective and edge-preserving.
inline bool is_valid_embedding(const Graph& pattern, const Graph& host, const Embedding& map) {
  if (map.size() != pattern.order()) return false;
  std::vector<Vertex> sorted = map;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (Vertex h : map) {
    if (h >= host.order()) return false;
  }
  for (const Edge& e : pattern.edges()) {
    if (!host.adjacent(map[e.u], map[e.v])) return false;
  }
  return true;
}

inline constexpr std::size_t kMaxCopyPatternOrder = 11;

// Every distinct copy of `pattern` inside K_{host_order}, each as a sorted edge
// list. Isolated pattern vertices only need room, so copies are the distinct
// edge sets of the non-isolated part.
inline std::vector<std::vector<Edge>> enumerate_copies(const Graph& pattern,
                                                       std::size_t host_order) {
  std::vector<std::vector<Edge>> out;
  if (pattern.order() > host_order) return out;
  const Subgraph core = without_isolated(pattern);
  const std::size_t k = core.graph.order();
  if (k == 0) {
    out.emplace_back();
    return out;
  }
  if (k > kMaxCopyPatternOrder) {
    throw InvalidInput("enumerate_copies: pattern has more than " +
                       std::to_string(kMaxCopyPatternOrder) + " non-isolated vertices");
  }
  // Distinct labelings of the core on vertices 0..k-1, as edge bitmasks over
  // the k-vertex triangle.
  auto bit = [k](Vertex a, Vertex b) {
    if (a > b) std::swap(a, b);
    return std::uint64_t{1} << (a * k - a * (a + 1) / 2 + (b - a - 1));
  };
  const std::vector<Edge> core_edges = core.graph.edges();
  std::vector<Vertex> perm(k);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::unordered_set<std::uint64_t> seen;
  std::vector<std::uint64_t> labeled;
  do {
    std::uint64_t mask = 0;
    for (const Edge& e : core_edges) mask |= bit(perm[e.u], perm[e.v]);
    if (seen.insert(mask).second) labeled.push_back(mask);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(labeled.begin(), labeled.end());

  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex a = 0; a < k; ++a) {
    for (Vertex b = a + 1; b < k; ++b) pairs.emplace_back(a, b);
  }
  // Walk all k-subsets of the host in lexicographic order.
  std::vector<Vertex> subset(k);
  std::iota(subset.begin(), subset.end(), Vertex{0});
  while (true) {
    for (std::uint64_t mask : labeled) {
      std::vector<Edge> copy;
      copy.reserve(core_edges.size());
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        if ((mask >> i) & 1U) copy.push_back({subset[pairs[i].first], subset[pairs[i].second]});
      }
      std::sort(copy.begin(), copy.end());
      out.push_back(std::move(copy));
    }
    std::size_t i = k;
    while (i > 0 && subset[i - 1] == host_order - k + i - 1) --i;
    if (i == 0) break;
    ++subset[i - 1];
    for (std::size_t j = i; j < k; ++j) subset[j] = subset[j - 1] + 1;
  }
  return out;
}

}  // namespace rsl

#endif  // RSL_EMBEDDING_HPP_
