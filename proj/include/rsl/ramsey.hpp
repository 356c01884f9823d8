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

// Exact two-color Ramsey numbers r(G, H) for small graphs.
//
// The arrow search colors the edges of K_N one at a time (vertex by vertex),
// with unit propagation over precomputed copies of G (red) and H (blue): a copy
// with every edge but one in its color forces the last edge to the other
// color. The edges at vertex 0 are fixed up front to a red-then-blue pattern,
// which loses no generality because vertices 1..N-1 are interchangeable. Each
// such pattern is an independent subtree; subtrees run on worker threads and
// the reported node count is the sum over subtrees up to and including the
// first one (by index) that yields a witness, so it does not depend on the
// thread count.

#ifndef RSL_RAMSEY_HPP_
#define RSL_RAMSEY_HPP_

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "rsl/canonical.hpp"
#include "rsl/catalog.hpp"
#include "rsl/certify.hpp"
#include "rsl/embedding.hpp"
#include "rsl/graph.hpp"
#include "rsl/graph6.hpp"

namespace rsl {

inline constexpr std::size_t kRamseyHostCap = 13;

struct RamseyBudget {
  std::size_t max_n = kRamseyHostCap;
  std::uint64_t max_nodes = 0;  // 0: unlimited
  double max_seconds = 0;       // 0: unlimited
  unsigned threads = 1;
  bool symmetry_breaking = true;
};

// Red edges of a 2-coloring of K_n; every other edge is blue.
struct Coloring {
  std::size_t n = 0;
  std::vector<Edge> red_edges;  // sorted

  Graph red_graph() const { return Graph::from_edge_list(n, red_edges); }
  Graph blue_graph() const {
    Graph g = catalog::complete(n);
    for (const Edge& e : red_edges) g.remove_edge(e.u, e.v);
    return g;
  }
  // Colors swapped.
  Coloring inverted() const {
    Coloring out{n, {}};
    const Graph red = red_graph();
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (!red.adjacent(u, v)) out.red_edges.push_back({u, v});
      }
    }
    return out;
  }
  friend bool operator==(const Coloring&, const Coloring&) = default;
};

inline void check_ramsey_pattern(const Graph& g, const char* which) {
  if (g.size() == 0) throw InvalidInput(std::string(which) + " must have at least one edge");
  if (has_isolated_vertex(g)) throw InvalidInput(std::string(which) + " has an isolated vertex");
}

// No red copy of g and no blue copy of h, checked over every copy in K_n.
inline bool validate_witness(const Graph& g, const Graph& h, const Coloring& c) {
  const Graph red = c.red_graph();
  for (const auto& copy : enumerate_copies(g, c.n)) {
    if (std::all_of(copy.begin(), copy.end(), [&](const Edge& e) { return red.adjacent(e.u, e.v); })) {
      return false;
    }
  }
  for (const auto& copy : enumerate_copies(h, c.n)) {
    if (std::none_of(copy.begin(), copy.end(), [&](const Edge& e) { return red.adjacent(e.u, e.v); })) {
      return false;
    }
  }
  return true;
}

namespace detail {

enum : std::int8_t { kUnset = 0, kRed = 1, kBlue = 2 };

// Read-only problem data shared by all subtree solvers.
struct ArrowProblem {
  std::size_t n = 0;
  std::size_t edge_count = 0;
  std::vector<Edge> edge_of;                // edge id -> endpoints
  std::vector<std::vector<int>> edge_id;    // [u][v] -> id
  std::vector<int> branch_order;            // edge ids in branching order
  // copies[c] = edge ids; side 0 = red copies of G, side 1 = blue copies of H.
  std::vector<std::vector<int>> copies[2];
  std::vector<std::vector<int>> copies_of_edge[2];

  ArrowProblem(const Graph& g, const Graph& h, std::size_t host) : n(host) {
    edge_id.assign(n, std::vector<int>(n, -1));
    for (Vertex v = 1; v < n; ++v) {
      for (Vertex u = 0; u < v; ++u) {
        edge_id[u][v] = edge_id[v][u] = static_cast<int>(edge_of.size());
        edge_of.push_back({u, v});
      }
    }
    edge_count = edge_of.size();
    for (int e = 0; e < static_cast<int>(edge_count); ++e) branch_order.push_back(e);
    const Graph* patterns[2] = {&g, &h};
    for (int side = 0; side < 2; ++side) {
      copies_of_edge[side].assign(edge_count, {});
      for (const auto& copy : enumerate_copies(*patterns[side], n)) {
        std::vector<int> ids;
        ids.reserve(copy.size());
        for (const Edge& e : copy) ids.push_back(edge_id[e.u][e.v]);
        const int c = static_cast<int>(copies[side].size());
        for (int id : ids) copies_of_edge[side][id].push_back(c);
        copies[side].push_back(std::move(ids));
      }
    }
  }
};

struct SearchControl {
  std::atomic<std::size_t> first_witness;  // least subtree index with a witness
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> out_of_budget{false};
  std::uint64_t max_nodes = 0;
  double max_seconds = 0;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
};

class ArrowSolver {
 public:
  ArrowSolver(const ArrowProblem& p, SearchControl& control, std::size_t subtree)
      : p_(p), control_(control), subtree_(subtree), color_(p.edge_count, kUnset) {
    for (int side = 0; side < 2; ++side) {
      own_[side].assign(p.copies[side].size(), 0);
      other_[side].assign(p.copies[side].size(), 0);
    }
  }

  // Applies a fixed prefix; false on immediate conflict.
  bool apply(const std::vector<std::pair<int, std::int8_t>>& prefix) {
    for (const auto& [e, c] : prefix) {
      if (!assign(e, c)) return false;
    }
    return true;
  }

  enum class Outcome { kWitness, kExhausted, kAborted };

  Outcome solve() {
    const Outcome o = search();
    if (o == Outcome::kWitness) {
      witness_.assign(color_.begin(), color_.end());
    }
    return o;
  }

  std::uint64_t nodes() const { return nodes_; }
  const std::vector<std::int8_t>& witness() const { return witness_; }

 private:
  bool aborted() {
    if (control_.first_witness.load(std::memory_order_relaxed) < subtree_) return true;
    if (control_.out_of_budget.load(std::memory_order_relaxed)) return true;
    if ((nodes_ & 1023) == 0) {
      const auto total = control_.nodes.fetch_add(1024, std::memory_order_relaxed) + 1024;
      if (control_.max_nodes && total > control_.max_nodes) {
        control_.out_of_budget = true;
        return true;
      }
      if (control_.max_seconds > 0 &&
          std::chrono::duration<double>(std::chrono::steady_clock::now() - control_.start).count() >
              control_.max_seconds) {
        control_.out_of_budget = true;
        return true;
      }
    }
    return false;
  }

  Outcome search() {
    ++nodes_;
    if (aborted()) return Outcome::kAborted;
    while (cursor_ < p_.branch_order.size() && color_[p_.branch_order[cursor_]] != kUnset) ++cursor_;
    if (cursor_ == p_.branch_order.size()) return Outcome::kWitness;
    const int e = p_.branch_order[cursor_];
    const std::size_t saved_cursor = cursor_;
    for (std::int8_t c : {kRed, kBlue}) {
      const std::size_t mark = trail_.size();
      if (assign(e, c)) {
        const Outcome o = search();
        if (o != Outcome::kExhausted) return o;
      }
      undo(mark);
      cursor_ = saved_cursor;
    }
    return Outcome::kExhausted;
  }

  // Colors e and propagates forced edges. Leaves everything on the trail even
  // on conflict; the caller undoes.
  bool assign(int e0, std::int8_t c0) {
    queue_.clear();
    queue_.emplace_back(e0, c0);
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const auto [e, c] = queue_[head];
      if (color_[e] == c) continue;
      if (color_[e] != kUnset) return false;
      color_[e] = c;
      trail_.push_back(e);
      const int side = c == kRed ? 0 : 1;
      bool conflict = false;
      for (int copy : p_.copies_of_edge[1 - side][e]) ++other_[1 - side][copy];
      for (int copy : p_.copies_of_edge[side][e]) {
        const auto filled = ++own_[side][copy];
        if (other_[side][copy] != 0) continue;
        const auto& ids = p_.copies[side][copy];
        if (filled == ids.size()) {
          conflict = true;
        } else if (filled + 1 == ids.size()) {
          for (int f : ids) {
            if (color_[f] == kUnset) {
              queue_.emplace_back(f, c == kRed ? kBlue : kRed);
              break;
            }
          }
        }
      }
      if (conflict) return false;
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const int e = trail_.back();
      trail_.pop_back();
      const int side = color_[e] == kRed ? 0 : 1;
      for (int copy : p_.copies_of_edge[1 - side][e]) --other_[1 - side][copy];
      for (int copy : p_.copies_of_edge[side][e]) --own_[side][copy];
      color_[e] = kUnset;
    }
  }

  const ArrowProblem& p_;
  SearchControl& control_;
  std::size_t subtree_;
  std::vector<std::int8_t> color_;
  std::vector<std::uint32_t> own_[2];    // edges of the copy's own color
  std::vector<std::uint32_t> other_[2];  // edges of the opposite color
  std::vector<int> trail_;
  std::vector<std::pair<int, std::int8_t>> queue_;
  std::size_t cursor_ = 0;
  std::uint64_t nodes_ = 0;
  std::vector<std::int8_t> witness_;
};

inline std::vector<std::vector<std::pair<int, std::int8_t>>> subtree_prefixes(
    const ArrowProblem& p, bool symmetry_breaking) {
  std::vector<std::vector<std::pair<int, std::int8_t>>> out;
  if (p.n < 2) {
    out.emplace_back();
    return out;
  }
  if (symmetry_breaking) {
    // Vertex 0 red to 1..k, blue to k+1..n-1.
    for (std::size_t k = p.n - 1; k + 1 > 0; --k) {
      std::vector<std::pair<int, std::int8_t>> prefix;
      for (Vertex j = 1; j < p.n; ++j) {
        prefix.emplace_back(p.edge_id[0][j], j <= k ? kRed : kBlue);
      }
      out.push_back(std::move(prefix));
    }
    return out;
  }
  const std::size_t fixed = std::min<std::size_t>(3, p.edge_count);
  for (std::uint32_t bits = 0; bits < (1U << fixed); ++bits) {
    std::vector<std::pair<int, std::int8_t>> prefix;
    for (std::size_t i = 0; i < fixed; ++i) {
      prefix.emplace_back(p.branch_order[i], ((bits >> (fixed - 1 - i)) & 1U) ? kBlue : kRed);
    }
    out.push_back(std::move(prefix));
  }
  return out;
}

}  // namespace detail

struct ArrowResult {
  bool decided = true;    // false when the budget lapsed
  bool arrows = false;
  std::optional<Coloring> witness;
  std::uint64_t nodes = 0;
};

// Does every red/blue coloring of K_n contain a red g or a blue h?
inline ArrowResult arrows(const Graph& g, const Graph& h, std::size_t n,
                          const RamseyBudget& budget = {}) {
  check_ramsey_pattern(g, "G");
  check_ramsey_pattern(h, "H");
  if (n < 1) throw InvalidInput("host order must be at least 1");
  if (n > budget.max_n) {
    throw InvalidInput("host order " + std::to_string(n) + " above cap " +
                       std::to_string(budget.max_n));
  }
  const detail::ArrowProblem problem(g, h, n);
  const auto prefixes = detail::subtree_prefixes(problem, budget.symmetry_breaking);
  detail::SearchControl control;
  control.first_witness = prefixes.size();
  control.max_nodes = budget.max_nodes;
  control.max_seconds = budget.max_seconds;

  struct SubtreeResult {
    detail::ArrowSolver::Outcome outcome = detail::ArrowSolver::Outcome::kAborted;
    std::uint64_t nodes = 0;
    std::vector<std::int8_t> witness;
    bool ran = false;
  };
  std::vector<SubtreeResult> results(prefixes.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= prefixes.size()) return;
      if (control.first_witness.load() < i || control.out_of_budget.load()) continue;
      detail::ArrowSolver solver(problem, control, i);
      SubtreeResult& r = results[i];
      r.ran = true;
      if (!solver.apply(prefixes[i])) {
        r.outcome = detail::ArrowSolver::Outcome::kExhausted;
        r.nodes = 1;
        continue;
      }
      r.outcome = solver.solve();
      r.nodes = solver.nodes();
      if (r.outcome == detail::ArrowSolver::Outcome::kWitness) {
        r.witness = solver.witness();
        std::size_t cur = control.first_witness.load();
        while (i < cur && !control.first_witness.compare_exchange_weak(cur, i)) {}
      }
    }
  };
  const unsigned threads = std::max(1U, std::min<unsigned>(budget.threads, prefixes.size()));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  ArrowResult out;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const SubtreeResult& r = results[i];
    out.nodes += r.nodes;
    if (r.outcome == detail::ArrowSolver::Outcome::kWitness) {
      Coloring c{n, {}};
      for (std::size_t e = 0; e < r.witness.size(); ++e) {
        if (r.witness[e] == detail::kRed) c.red_edges.push_back(problem.edge_of[e]);
      }
      std::sort(c.red_edges.begin(), c.red_edges.end());
      out.arrows = false;
      out.witness = std::move(c);
      return out;
    }
    if (r.outcome == detail::ArrowSolver::Outcome::kAborted) {
      out.decided = false;
      return out;
    }
  }
  out.arrows = true;
  return out;
}

// ---------------------------------------------------------------------------
// Bounds.

struct RamseyBounds {
  std::int64_t lo = 1;
  std::int64_t hi = 1;
  std::string lo_source;
  std::string hi_source;
};

namespace detail {

inline std::size_t chromatic_number(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) return 0;
  if (g.size() == 0) return 1;
  std::vector<int> color(n, -1);
  for (std::size_t k = 2; k <= n; ++k) {
    auto place = [&](auto&& self, Vertex v) -> bool {
      if (v == n) return true;
      int used_max = -1;
      for (Vertex u = 0; u < v; ++u) used_max = std::max(used_max, color[u]);
      for (int c = 0; c < static_cast<int>(k) && c <= used_max + 1; ++c) {
        bool ok = true;
        g.for_each_neighbor(v, [&](Vertex w) {
          if (w < v && color[w] == c) ok = false;
        });
        if (!ok) continue;
        color[v] = c;
        if (self(self, v + 1)) return true;
      }
      color[v] = -1;
      return false;
    };
    if (place(place, 0)) return k;
  }
  return n;
}

inline std::size_t largest_component(const Graph& g) {
  const auto comp = components(g);
  std::vector<std::size_t> size(g.order() + 1, 0);
  for (auto c : comp) ++size[c];
  return g.order() ? *std::max_element(size.begin(), size.end()) : 0;
}

inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline bool is_complete(const Graph& g) { return 2 * g.size() == g.order() * (g.order() - 1); }

inline bool is_triangle(const Graph& g) { return g.order() == 3 && g.size() == 3; }

}  // namespace detail

// lo <= r(G, H) <= hi from closed forms.
inline RamseyBounds ramsey_bounds(const Graph& g, const Graph& h) {
  check_ramsey_pattern(g, "G");
  check_ramsey_pattern(h, "H");
  RamseyBounds b;
  const auto vg = static_cast<std::int64_t>(g.order());
  const auto vh = static_cast<std::int64_t>(h.order());
  b.lo = std::max(vg, vh);
  b.lo_source = "max(v(G), v(H))";
  // Chvatal-Harary: chi(G)-1 blue cliques of size c(H)-1, red between them.
  auto harary = [](const Graph& a, const Graph& c) {
    return (static_cast<std::int64_t>(detail::chromatic_number(a)) - 1) *
               (static_cast<std::int64_t>(detail::largest_component(c)) - 1) +
           1;
  };
  if (const auto x = harary(g, h); x > b.lo) {
    b.lo = x;
    b.lo_source = "(chi(G)-1)(c(H)-1)+1";
  }
  if (const auto x = harary(h, g); x > b.lo) {
    b.lo = x;
    b.lo_source = "(chi(H)-1)(c(G)-1)+1";
  }

  b.hi = detail::binomial(vg + vh - 2, vg - 1);
  b.hi_source = "r(K_v(G), K_v(H)) <= C(v(G)+v(H)-2, v(G)-1)";
  auto offer = [&](std::int64_t value, const char* source) {
    if (value < b.hi) {
      b.hi = value;
      b.hi_source = source;
    }
  };
  if (g.order() == 2) offer(vh, "r(K2,H) = v(H)");
  if (h.order() == 2) offer(vg, "r(G,K2) = v(G)");
  if (is_forest(g) && detail::is_complete(h)) offer(chvatal_tree_ramsey(vg, vh), "Chvatal tree bound");
  if (is_forest(h) && detail::is_complete(g)) offer(chvatal_tree_ramsey(vh, vg), "Chvatal tree bound");
  if (detail::is_triangle(g)) offer(sidorenko_bound(h), "Sidorenko bound 2e(H)+1");
  if (detail::is_triangle(h)) offer(sidorenko_bound(g), "Sidorenko bound 2e(G)+1");
  if (is_forest(g)) offer(forest_linear_bound(g, h), "forest bound via K_{2e(H)}");
  if (is_forest(h)) offer(forest_linear_bound(h, g), "forest bound via K_{2e(G)}");
  return b;
}

// ---------------------------------------------------------------------------
// Exact values.

struct RamseyResult {
  Graph g;
  Graph h;
  CanonicalCode g_code;
  CanonicalCode h_code;
  std::optional<std::int64_t> value;
  std::int64_t lo = 1;  // certified lower bound
  std::int64_t hi = 1;  // certified upper bound
  RamseyBounds analytic;
  std::optional<Coloring> witness;  // on lo - 1 vertices
  std::uint64_t nodes = 0;
  double wall_seconds = 0;
  RamseyBudget budget;

  bool exact() const { return value.has_value(); }
};

// ---------------------------------------------------------------------------
// JSON.

inline nlohmann::json to_json(const Coloring& c) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : c.red_edges) edges.push_back({e.u, e.v});
  return {{"n", c.n}, {"red_edges", std::move(edges)}, {"red_graph6", graph6_encode(c.red_graph())}};
}

inline Coloring coloring_from_json(const nlohmann::json& j) {
  Coloring c;
  c.n = j.at("n");
  for (const auto& e : j.at("red_edges")) c.red_edges.push_back(Edge::normalized(e.at(0), e.at(1)));
  std::sort(c.red_edges.begin(), c.red_edges.end());
  return c;
}

inline nlohmann::json to_json(const RamseyResult& r) {
  nlohmann::json out = {{"g", graph6_encode(r.g)}, {"h", graph6_encode(r.h)}};
  out["exact"] = r.exact();
  if (r.value) out["value"] = *r.value;
  out["lo"] = r.lo;
  out["hi"] = r.hi;
  out["analytic"] = {{"lo", r.analytic.lo},
                     {"hi", r.analytic.hi},
                     {"lo_source", r.analytic.lo_source},
                     {"hi_source", r.analytic.hi_source}};
  if (r.witness) out["witness"] = to_json(*r.witness);
  out["budget"] = {{"max_n", r.budget.max_n},
                   {"max_nodes", r.budget.max_nodes},
                   {"max_seconds", r.budget.max_seconds}};
  out["stats"] = {{"nodes", r.nodes}, {"wall_ms", static_cast<std::int64_t>(r.wall_seconds * 1000)}};
  return out;
}

inline RamseyResult ramsey_result_from_json(const nlohmann::json& j) {
  RamseyResult r;
  r.g = graph6_decode(j.at("g").get<std::string>());
  r.h = graph6_decode(j.at("h").get<std::string>());
  r.g_code = canonical_code(r.g);
  r.h_code = canonical_code(r.h);
  if (j.contains("value")) r.value = j.at("value").get<std::int64_t>();
  r.lo = j.at("lo");
  r.hi = j.at("hi");
  const auto& a = j.at("analytic");
  r.analytic = {a.at("lo"), a.at("hi"), a.at("lo_source"), a.at("hi_source")};
  if (j.contains("witness")) r.witness = coloring_from_json(j.at("witness"));
  const auto& b = j.at("budget");
  r.budget.max_n = b.at("max_n");
  r.budget.max_nodes = b.at("max_nodes");
  r.budget.max_seconds = b.at("max_seconds");
  r.nodes = j.at("stats").at("nodes");
  r.wall_seconds = j.at("stats").at("wall_ms").get<double>() / 1000;
  return r;
}

// A stored result re-targeted at (g, h): colors are swapped when the stored
// pair is in the opposite order, and the witness is re-validated. nullopt if
// the entry is for a different pair or does not validate.
inline std::optional<RamseyResult> reuse_result(RamseyResult stored, const Graph& g, const Graph& h) {
  const CanonicalCode cg = canonical_code(g);
  const CanonicalCode ch = canonical_code(h);
  const bool same = stored.g_code == cg && stored.h_code == ch;
  if (!same && !(stored.g_code == ch && stored.h_code == cg)) return std::nullopt;
  if (!same) {
    std::swap(stored.g_code, stored.h_code);
    if (stored.witness) stored.witness = stored.witness->inverted();
  }
  stored.g = g;
  stored.h = h;
  if (stored.lo > stored.hi) return std::nullopt;
  if (stored.witness && (static_cast<std::int64_t>(stored.witness->n) + 1 != stored.lo ||
                         !validate_witness(g, h, *stored.witness))) {
    return std::nullopt;
  }
  return stored;
}

namespace detail {

inline RamseyResult compute_ramsey(const Graph& g, const Graph& h, const RamseyBudget& budget) {
  const auto start = std::chrono::steady_clock::now();
  RamseyResult r;
  r.g = g;
  r.h = h;
  r.g_code = canonical_code(g);
  r.h_code = canonical_code(h);
  r.budget = budget;
  r.analytic = ramsey_bounds(g, h);
  r.lo = r.analytic.lo;
  r.hi = r.analytic.hi;

  std::int64_t n = std::max<std::int64_t>(1, r.analytic.lo - 1);
  const auto cap = static_cast<std::int64_t>(budget.max_n);
  for (; n <= std::min(r.hi, cap); ++n) {
    RamseyBudget step = budget;
    if (budget.max_seconds > 0) {
      const double used =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      step.max_seconds = std::max(1e-3, budget.max_seconds - used);
    }
    if (budget.max_nodes) {
      if (r.nodes >= budget.max_nodes) break;
      step.max_nodes = budget.max_nodes - r.nodes;
    }
    ArrowResult a = arrows(g, h, static_cast<std::size_t>(n), step);
    r.nodes += a.nodes;
    if (!a.decided) break;
    if (a.arrows) {
      if (n < r.analytic.lo) throw std::logic_error("search contradicts the analytic lower bound");
      r.value = n;
      r.lo = r.hi = n;
      break;
    }
    if (n >= r.analytic.hi) throw std::logic_error("witness found at the analytic upper bound");
    r.witness = std::move(a.witness);
    r.lo = std::max(r.lo, n + 1);
  }
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace detail

// Memo of results keyed by the unordered pair of canonical codes. Hits are
// re-validated before reuse and oriented to the caller's (G, H) order.
class RamseyCache {
 public:
  std::optional<RamseyResult> get(const Graph& g, const Graph& h) {
    const CanonicalCode cg = canonical_code(g);
    const CanonicalCode ch = canonical_code(h);
    std::lock_guard lock(mutex_);
    auto it = entries_.find(ch < cg ? std::make_pair(ch, cg) : std::make_pair(cg, ch));
    if (it == entries_.end()) return std::nullopt;
    auto r = reuse_result(it->second, g, h);
    if (!r) entries_.erase(it);
    return r;
  }

  void put(const RamseyResult& r) {
    std::lock_guard lock(mutex_);
    if (r.h_code < r.g_code) {
      RamseyResult flipped = r;
      std::swap(flipped.g, flipped.h);
      std::swap(flipped.g_code, flipped.h_code);
      if (flipped.witness) flipped.witness = flipped.witness->inverted();
      entries_[{flipped.g_code, flipped.h_code}] = std::move(flipped);
    } else {
      entries_[{r.g_code, r.h_code}] = r;
    }
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<CanonicalCode, CanonicalCode>, RamseyResult> entries_;
};

// Least N with arrows(G, H, N), searched upward from the analytic lower
// bound minus one. Budget exhaustion degrades to certified bounds.
inline RamseyResult ramsey_exact(const Graph& g, const Graph& h, const RamseyBudget& budget = {},
                                 RamseyCache* cache = nullptr) {
  if (cache) {
    if (auto hit = cache->get(g, h); hit && hit->exact()) return *hit;
  }
  RamseyResult r = detail::compute_ramsey(g, h, budget);
  if (r.witness && !validate_witness(g, h, *r.witness)) {
    throw std::logic_error("search produced an invalid witness");
  }
  if (cache && r.exact()) cache->put(r);
  return r;
}

// ---------------------------------------------------------------------------
// Evidence curves.

enum class Family { kMatchings, kPaths, kStars };

inline Family parse_family(const std::string& name) {
  if (name == "matchings") return Family::kMatchings;
  if (name == "paths") return Family::kPaths;
  if (name == "stars") return Family::kStars;
  throw InvalidInput("unknown family '" + name + "' (matchings, paths, stars)");
}

inline Graph family_member(Family f, std::size_t k) {
  switch (f) {
    case Family::kMatchings: return catalog::matching(k);
    case Family::kPaths: return catalog::path(k);
    default: return catalog::star(k);
  }
}

struct EvidenceRow {
  std::size_t k = 0;
  Graph h;
  RamseyResult result;
  Rational ratio_lo;  // lo / e(H)
  Rational ratio_hi;  // hi / e(H)
};

inline std::vector<EvidenceRow> evidence_curve(const Graph& g, Family family, std::size_t k_min,
                                               std::size_t k_max, const RamseyBudget& budget = {},
                                               RamseyCache* cache = nullptr) {
  std::vector<EvidenceRow> rows;
  for (std::size_t k = k_min; k <= k_max; ++k) {
    EvidenceRow row;
    row.k = k;
    row.h = family_member(family, k);
    if (row.h.size() == 0) throw InvalidInput("family member for k=" + std::to_string(k) + " has no edges");
    row.result = ramsey_exact(g, row.h, budget, cache);
    const auto e = static_cast<std::int64_t>(row.h.size());
    row.ratio_lo = Rational(row.result.lo, e);
    row.ratio_hi = Rational(row.result.hi, e);
    rows.push_back(std::move(row));
  }
  return rows;
}

// Re-checks a serialized result: graphs decode, bounds are ordered, and the
// witness (if any) is valid on lo - 1 vertices.
inline bool validate_ramsey_json(const nlohmann::json& j) {
  try {
    const Graph g = graph6_decode(j.at("g").get<std::string>());
    const Graph h = graph6_decode(j.at("h").get<std::string>());
    const std::int64_t lo = j.at("lo");
    const std::int64_t hi = j.at("hi");
    if (lo > hi) return false;
    if (j.contains("value") && (j.at("value") != lo || lo != hi)) return false;
    if (j.contains("witness")) {
      const Coloring c = coloring_from_json(j.at("witness"));
      if (static_cast<std::int64_t>(c.n) + 1 != lo) return false;
      if (!validate_witness(g, h, c)) return false;
    }
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace rsl

#endif  // RSL_RAMSEY_HPP_
