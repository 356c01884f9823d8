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

// Named graph families. Short names accepted by named_graph():
//   K<n>            complete graph
//   K<a>_<b>        complete bipartite
//   K<a>_<b>_<c>    complete tripartite
//   C<n> P<n>       cycle / path on n vertices
//   S<n>            star K_{1,n}
//   M<m>            matching mK_2
//   W<n>            wheel: hub joined to C_n
//   petersen
// and long forms complete(n), complete_bipartite(a,b),
// complete_tripartite(a,b,c), cycle(n), path(n), star(n), matching(m),
// wheel(n), tree_from_pruefer(s1,s2,...).

#ifndef RSL_CATALOG_HPP_
#define RSL_CATALOG_HPP_

#include <algorithm>
#include <charconv>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rsl/graph.hpp"

namespace rsl::catalog {

inline Graph complete(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

// Complete multipartite graph with parts of the given sizes, laid out
// consecutively.
inline Graph complete_multipartite(std::span<const std::size_t> parts) {
  std::size_t n = 0;
  for (auto p : parts) n += p;
  std::vector<std::size_t> part_of;
  for (std::size_t i = 0; i < parts.size(); ++i) part_of.insert(part_of.end(), parts[i], i);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (part_of[u] != part_of[v]) g.add_edge(u, v);
    }
  }
  return g;
}

inline Graph complete_bipartite(std::size_t a, std::size_t b) {
  const std::size_t parts[] = {a, b};
  return complete_multipartite(parts);
}

inline Graph complete_tripartite(std::size_t a, std::size_t b, std::size_t c) {
  const std::size_t parts[] = {a, b, c};
  return complete_multipartite(parts);
}

inline Graph cycle(std::size_t n) {
  if (n < 3) throw InvalidInput("cycle needs at least 3 vertices");
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, static_cast<Vertex>((v + 1) % n));
  return g;
}

inline Graph path(std::size_t n) {
  if (n < 1) throw InvalidInput("path needs at least 1 vertex");
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

// K_{1,leaves}, centre 0.
inline Graph star(std::size_t leaves) {
  Graph g(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

inline Graph matching(std::size_t m) {
  Graph g(2 * m);
  for (Vertex i = 0; i < m; ++i) g.add_edge(2 * i, 2 * i + 1);
  return g;
}

// Hub 0 joined to the rim cycle 1..n.
inline Graph wheel(std::size_t n) {
  if (n < 3) throw InvalidInput("wheel needs a rim of at least 3 vertices");
  Graph g(n + 1);
  for (Vertex v = 1; v <= n; ++v) {
    g.add_edge(0, v);
    g.add_edge(v, static_cast<Vertex>(v % n + 1));
  }
  return g;
}

inline Graph petersen() {
  Graph g(10);
  for (Vertex i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);          // outer 5-cycle
    g.add_edge(i, i + 5);                // spokes
    g.add_edge(i + 5, (i + 2) % 5 + 5);  // inner pentagram
  }
  return g;
}

// Tree on sequence.size() + 2 vertices.
inline Graph tree_from_pruefer(std::span<const Vertex> sequence) {
  const std::size_t n = sequence.size() + 2;
  for (Vertex s : sequence) {
    if (s >= n) throw InvalidInput("Pruefer entry " + std::to_string(s) + " out of range");
  }
  std::vector<std::size_t> degree(n, 1);
  for (Vertex s : sequence) ++degree[s];
  Graph g(n);
  for (Vertex s : sequence) {
    Vertex leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    g.add_edge(leaf, s);
    --degree[leaf];
    --degree[s];
  }
  std::vector<Vertex> last;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) last.push_back(v);
  }
  g.add_edge(last[0], last[1]);
  return g;
}

namespace detail {

inline std::vector<std::size_t> parse_numbers(std::string_view text, char sep) {
  std::vector<std::size_t> out;
  if (text.empty()) return out;
  while (true) {
    const auto cut = text.find(sep);
    const std::string_view part = text.substr(0, cut);
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc() || ptr != part.data() + part.size() || part.empty()) {
      throw InvalidInput("bad number '" + std::string(part) + "'");
    }
    out.push_back(value);
    if (cut == std::string_view::npos) break;
    text.remove_prefix(cut + 1);
  }
  return out;
}

inline void expect_count(std::string_view name, const std::vector<std::size_t>& args,
                         std::size_t count) {
  if (args.size() != count) {
    throw InvalidInput(std::string(name) + " expects " + std::to_string(count) +
                       " parameter(s)");
  }
}

}  // namespace detail

inline Graph named_graph(std::string_view name) {
  using detail::expect_count;
  using detail::parse_numbers;
  if (name == "petersen" || name == "Petersen") return petersen();

  if (const auto open = name.find('('); open != std::string_view::npos) {
    if (name.back() != ')') throw InvalidInput("unbalanced parentheses in '" + std::string(name) + "'");
    const std::string_view id = name.substr(0, open);
    const auto args = parse_numbers(name.substr(open + 1, name.size() - open - 2), ',');
    if (id == "complete") { expect_count(id, args, 1); return complete(args[0]); }
    if (id == "complete_bipartite") { expect_count(id, args, 2); return complete_bipartite(args[0], args[1]); }
    if (id == "complete_tripartite") {
      expect_count(id, args, 3);
      return complete_tripartite(args[0], args[1], args[2]);
    }
    if (id == "cycle") { expect_count(id, args, 1); return cycle(args[0]); }
    if (id == "path") { expect_count(id, args, 1); return path(args[0]); }
    if (id == "star") { expect_count(id, args, 1); return star(args[0]); }
    if (id == "matching") { expect_count(id, args, 1); return matching(args[0]); }
    if (id == "wheel") { expect_count(id, args, 1); return wheel(args[0]); }
    if (id == "tree_from_pruefer") {
      std::vector<Vertex> seq(args.begin(), args.end());
      return tree_from_pruefer(seq);
    }
    throw InvalidInput("unknown catalog identifier '" + std::string(id) + "'");
  }

  if (name.size() >= 2) {
    const char head = name[0];
    const std::string_view rest = name.substr(1);
    if (head == 'K') {
      const auto parts = parse_numbers(rest, '_');
      if (parts.size() == 1) return complete(parts[0]);
      return complete_multipartite(parts);
    }
    if (head == 'C' || head == 'P' || head == 'S' || head == 'M' || head == 'W') {
      const auto args = parse_numbers(rest, '_');
      expect_count(std::string_view(&head, 1), args, 1);
      switch (head) {
        case 'C': return cycle(args[0]);
        case 'P': return path(args[0]);
        case 'S': return star(args[0]);
        case 'M': return matching(args[0]);
        default: return wheel(args[0]);
      }
    }
  }
  throw InvalidInput("unknown catalog identifier '" + std::string(name) + "'");
}

}  // namespace rsl::catalog

#endif  // RSL_CATALOG_HPP_
