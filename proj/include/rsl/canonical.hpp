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

#ifndef RSL_CANONICAL_HPP_
#define RSL_CANONICAL_HPP_

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rsl/graph.hpp"

namespace rsl {

inline constexpr std::size_t kDefaultCanonicalLimit = 32;

// Isomorphism-class fingerprint: the order byte followed by the packed upper
// triangle (row-major) of the lexicographically least relabeled adjacency
// matrix reachable by the refinement search.
struct CanonicalCode {
  std::string bytes;

  std::string hex() const {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (unsigned char c : bytes) {
      out.push_back(kDigits[c >> 4]);
      out.push_back(kDigits[c & 15]);
    }
    return out;
  }
  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

struct CanonicalCodeHash {
  std::size_t operator()(const CanonicalCode& c) const {
    return std::hash<std::string>{}(c.bytes);
  }
};

namespace detail {

class Canonicalizer {
 public:
  explicit Canonicalizer(const Graph& g) : g_(g), n_(g.order()) {}

  // Vertex placed at each canonical position; valid after run().
  const std::vector<Vertex>& labeling() const { return best_labeling_; }

  CanonicalCode run() {
    std::vector<std::size_t> colors(n_);
    for (Vertex v = 0; v < n_; ++v) colors[v] = g_.degree(v);
    normalize(colors);
    refine(colors);
    search(colors);
    CanonicalCode code;
    code.bytes.push_back(static_cast<char>(n_));
    code.bytes += best_;
    return code;
  }

 private:
  // Rank-compress colors so they are 0..k-1 in order of value.
  static void normalize(std::vector<std::size_t>& colors) {
    std::vector<std::size_t> sorted = colors;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (auto& c : colors) {
      c = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), c) -
                                   sorted.begin());
    }
  }

  static std::size_t count_colors(const std::vector<std::size_t>& colors) {
    std::size_t k = 0;
    for (auto c : colors) k = std::max(k, c + 1);
    return k;
  }

  // Color refinement to a stable partition. New colors are ranks of the
  // signature (old color, sorted neighbor colors), which is invariant under
  // relabeling and never merges existing classes.
  void refine(std::vector<std::size_t>& colors) const {
    std::size_t classes = count_colors(colors);
    std::vector<std::vector<std::size_t>> sig(n_);
    while (true) {
      for (Vertex v = 0; v < n_; ++v) {
        auto& s = sig[v];
        s.clear();
        s.push_back(colors[v]);
        g_.for_each_neighbor(v, [&](Vertex w) { s.push_back(colors[w]); });
        std::sort(s.begin() + 1, s.end());
      }
      std::vector<Vertex> order(n_);
      for (Vertex v = 0; v < n_; ++v) order[v] = v;
      std::sort(order.begin(), order.end(),
                [&](Vertex a, Vertex b) { return sig[a] < sig[b]; });
      std::size_t rank = 0;
      std::vector<std::size_t> next(n_);
      for (std::size_t i = 0; i < n_; ++i) {
        if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++rank;
        next[order[i]] = rank;
      }
      const std::size_t next_classes = n_ ? rank + 1 : 0;
      colors.swap(next);
      if (next_classes == classes) return;
      classes = next_classes;
    }
  }

  bool twins(Vertex a, Vertex b) const {
    auto ra = g_.row(a);
    auto rb = g_.row(b);
    for (std::size_t w = 0; w < ra.size(); ++w) {
      std::uint64_t x = ra[w];
      std::uint64_t y = rb[w];
      if (w == b / 64) x &= ~(std::uint64_t{1} << (b % 64));
      if (w == a / 64) y &= ~(std::uint64_t{1} << (a % 64));
      if (x != y) return false;
    }
    return true;
  }

  void search(const std::vector<std::size_t>& colors) {
    const std::size_t classes = count_colors(colors);
    if (classes == n_) {
      leaf(colors);
      return;
    }
    // First non-singleton cell.
    std::vector<std::size_t> size(classes, 0);
    for (auto c : colors) ++size[c];
    std::size_t target = 0;
    while (size[target] == 1) ++target;

    std::vector<Vertex> branched;
    for (Vertex v = 0; v < n_; ++v) {
      if (colors[v] != target) continue;
      // Swapping twins is an automorphism fixing every other vertex, so it
      // maps this subtree onto an already explored one.
      if (std::any_of(branched.begin(), branched.end(),
                      [&](Vertex u) { return twins(u, v); })) {
        continue;
      }
      // Same for any known automorphism fixing the current path pointwise.
      if (!branched.empty()) {
        const auto orbit = stabilizer_orbits();
        if (std::any_of(branched.begin(), branched.end(),
                        [&](Vertex u) { return orbit[u] == orbit[v]; })) {
          continue;
        }
      }
      branched.push_back(v);
      std::vector<std::size_t> child = colors;
      for (Vertex w = 0; w < n_; ++w) {
        if (w != v && child[w] >= target) ++child[w];
      }
      refine(child);
      path_.push_back(v);
      search(child);
      path_.pop_back();
    }
  }

  // Orbit representatives under the stored automorphisms that fix path_.
  std::vector<Vertex> stabilizer_orbits() const {
    std::vector<Vertex> parent(n_);
    for (Vertex v = 0; v < n_; ++v) parent[v] = v;
    auto find = [&](Vertex v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (const auto& sigma : automorphisms_) {
      if (!std::all_of(path_.begin(), path_.end(), [&](Vertex p) { return sigma[p] == p; })) {
        continue;
      }
      for (Vertex v = 0; v < n_; ++v) {
        const Vertex a = find(v);
        const Vertex b = find(sigma[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    std::vector<Vertex> orbit(n_);
    for (Vertex v = 0; v < n_; ++v) orbit[v] = find(v);
    return orbit;
  }

  // Two leaves with equal codes differ by an automorphism.
  void record_automorphism(const std::vector<Vertex>& from, const std::vector<Vertex>& to) {
    if (automorphisms_.size() >= kMaxAutomorphisms) return;
    std::vector<Vertex> sigma(n_);
    for (std::size_t i = 0; i < n_; ++i) sigma[from[i]] = to[i];
    for (Vertex v = 0; v < n_; ++v) {
      if (sigma[v] != v) {
        automorphisms_.push_back(std::move(sigma));
        return;
      }
    }
  }

  void leaf(const std::vector<std::size_t>& position) {
    std::vector<Vertex> at(n_);
    for (Vertex v = 0; v < n_; ++v) at[position[v]] = v;
    std::string code;
    code.reserve((n_ * n_ / 2 + 7) / 8);
    unsigned char byte = 0;
    int filled = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) {
        byte = static_cast<unsigned char>((byte << 1) | (g_.adjacent(at[i], at[j]) ? 1 : 0));
        if (++filled == 8) {
          code.push_back(static_cast<char>(byte));
          byte = 0;
          filled = 0;
        }
      }
    }
    if (filled) code.push_back(static_cast<char>(byte << (8 - filled)));
    if (!have_best_) {
      first_ = code;
      first_labeling_ = at;
    } else if (code == first_) {
      record_automorphism(at, first_labeling_);
    }
    if (!have_best_ || code < best_) {
      best_ = std::move(code);
      best_labeling_ = at;
      have_best_ = true;
    } else if (code == best_ && best_ != first_) {
      record_automorphism(at, best_labeling_);
    }
  }

  static constexpr std::size_t kMaxAutomorphisms = 256;

  const Graph& g_;
  std::size_t n_;
  std::string best_;
  bool have_best_ = false;
  std::vector<Vertex> best_labeling_;
  std::string first_;
  std::vector<Vertex> first_labeling_;
  std::vector<Vertex> path_;
  std::vector<std::vector<Vertex>> automorphisms_;
};

}  // namespace detail

inline CanonicalCode canonical_code(const Graph& g,
                                    std::size_t limit = kDefaultCanonicalLimit) {
  if (g.order() > limit) {
    throw InvalidInput("canonical_code: order " + std::to_string(g.order()) +
                       " exceeds limit " + std::to_string(limit));
  }
  return detail::Canonicalizer(g).run();
}

// The canonical representative: g relabeled so vertex i is the i-th vertex of
// the best leaf.
inline Graph canonical_form(const Graph& g, std::size_t limit = kDefaultCanonicalLimit) {
  if (g.order() > limit) {
    throw InvalidInput("canonical_form: order exceeds limit");
  }
  detail::Canonicalizer c(g);
  c.run();
  std::vector<Vertex> perm(g.order());
  for (Vertex i = 0; i < g.order(); ++i) perm[c.labeling()[i]] = i;
  return relabeled(g, perm);
}

}  // namespace rsl

#endif  // RSL_CANONICAL_HPP_
