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

// graph6 text encoding, small-order form (at most 62 vertices).
//
// The line is one header byte (63 + n) followed by the upper triangle of the
// adjacency matrix read column by column (x(0,1), x(0,2), x(1,2), x(0,3), ...),
// padded with zeros to a multiple of six and emitted as bytes 63 + group.

#ifndef RSL_GRAPH6_HPP_
#define RSL_GRAPH6_HPP_

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "rsl/graph.hpp"

namespace rsl {

inline constexpr std::size_t kGraph6MaxOrder = 62;

inline std::string graph6_encode(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kGraph6MaxOrder) {
    throw InvalidInput("graph6 small form supports at most 62 vertices, got " +
                       std::to_string(n));
  }
  std::string out(1, static_cast<char>(63 + n));
  int group = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + group));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (group << (6 - filled))));
  return out;
}

inline Graph graph6_decode(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) {
    line.remove_suffix(1);
  }
  if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
  if (line.empty()) throw InvalidInput("graph6: empty line");
  const int header = static_cast<unsigned char>(line[0]);
  if (header == 126) throw InvalidInput("graph6: large-order header not supported");
  if (header < 63 || header > 126) throw InvalidInput("graph6: malformed header");
  const std::size_t n = static_cast<std::size_t>(header - 63);
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t expected = 1 + (bits + 5) / 6;
  if (line.size() != expected) {
    throw InvalidInput("graph6: expected " + std::to_string(expected) +
                       " bytes for order " + std::to_string(n) + ", got " +
                       std::to_string(line.size()));
  }
  Graph g(n);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int byte = static_cast<unsigned char>(line[1 + k / 6]);
      if (byte < 63 || byte > 126) throw InvalidInput("graph6: byte out of range");
      if (((byte - 63) >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  // Padding bits must be zero.
  if (bits % 6 != 0) {
    const int last = static_cast<unsigned char>(line.back()) - 63;
    if (last < 0 || last > 63) throw InvalidInput("graph6: byte out of range");
    if (last & ((1 << (6 - bits % 6)) - 1)) {
      throw InvalidInput("graph6: nonzero padding bits");
    }
  }
  return g;
}

// Reads one graph per non-blank line.
inline std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(graph6_decode(line));
  }
  return out;
}

}  // namespace rsl

#endif  // RSL_GRAPH6_HPP_
