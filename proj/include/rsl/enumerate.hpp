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

#ifndef RSL_ENUMERATE_HPP_
#define RSL_ENUMERATE_HPP_

#include <map>
#include <vector>

#include "rsl/canonical.hpp"
#include "rsl/graph.hpp"

namespace rsl {

// One representative per isomorphism class of graphs on exactly `order`
// vertices, sorted by canonical code. Grows each class of order n-1 by a new
// vertex with every possible neighborhood.
inline std::vector<Graph> all_graphs(std::size_t order) {
  std::map<CanonicalCode, Graph> classes;
  classes.emplace(canonical_code(Graph(0)), Graph(0));
  for (std::size_t n = 1; n <= order; ++n) {
    std::map<CanonicalCode, Graph> next;
    for (const auto& [code, base] : classes) {
      for (std::uint64_t nbrs = 0; nbrs < (std::uint64_t{1} << (n - 1)); ++nbrs) {
        Graph g(n);
        for (const Edge& e : base.edges()) g.add_edge(e.u, e.v);
        for (Vertex v = 0; v + 1 < n; ++v) {
          if ((nbrs >> v) & 1U) g.add_edge(v, static_cast<Vertex>(n - 1));
        }
        next.try_emplace(canonical_code(g), std::move(g));
      }
    }
    classes.swap(next);
  }
  std::vector<Graph> out;
  out.reserve(classes.size());
  for (auto& [code, g] : classes) out.push_back(std::move(g));
  return out;
}

// All classes with order 1..max_order.
inline std::vector<Graph> all_graphs_up_to(std::size_t max_order) {
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= max_order; ++n) {
    auto layer = all_graphs(n);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace rsl

#endif  // RSL_ENUMERATE_HPP_
