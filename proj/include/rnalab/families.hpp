#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rnalab/graph.hpp"
#include "rnalab/parity.hpp"
#include "rnalab/tree_codes.hpp"

namespace rnalab {

// K_{1,n}: centre 0, leaves 1..n.
inline Graph star(std::size_t n) {
  if (n < 1) throw Error("star needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= n; ++v) edges.push_back(Edge{0, v});
  return Graph(n + 1, std::move(edges));
}

inline Graph path(std::size_t p) {
  if (p < 1) throw Error("path needs at least one vertex");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < p; ++v) edges.push_back(Edge{v - 1, v});
  return Graph(p, std::move(edges));
}

// S_m(l): centre 0 with m-1 pendant legs and one leg of length l. Ids are given
// breadth-first from the centre, long leg first: 1 is the first long-leg vertex,
// 2..m the pendant leaves, m+1..m+l-1 the rest of the long leg.
inline Graph spider(std::size_t m, std::size_t l) {
  if (m < 2) throw Error("spider needs m >= 2 legs");
  if (l < 1) throw Error("spider needs leg length l >= 1");
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= m; ++v) edges.push_back(Edge{0, v});
  Vertex prev = 1;
  for (Vertex v = static_cast<Vertex>(m + 1); v < m + l; ++v) {
    edges.push_back(Edge::make(prev, v));
    prev = v;
  }
  return Graph(m + l, std::move(edges));
}

// Root 0, children 1..k, then each child's k-1 leaves in child order.
inline Graph perfect_kary_depth2(std::size_t k) {
  if (k < 2) throw Error("perfect k-ary tree needs k >= 2");
  std::vector<Edge> edges;
  Vertex next = static_cast<Vertex>(k + 1);
  for (Vertex c = 1; c <= k; ++c) edges.push_back(Edge{0, c});
  for (Vertex c = 1; c <= k; ++c)
    for (std::size_t j = 0; j + 1 < k; ++j) edges.push_back(Edge{c, next++});
  return Graph(k * k + 1, std::move(edges));
}

namespace detail {

// Uniform draw in [0, bound) that does not depend on the standard library's
// distribution implementation.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do x = rng(); while (x >= limit);
  return x % bound;
}

}  // namespace detail

inline Graph random_tree(std::size_t p, std::mt19937_64& rng) {
  if (p < 2) throw Error("random tree needs order >= 2");
  std::vector<Vertex> seq(p - 2);
  for (auto& x : seq) x = static_cast<Vertex>(detail::uniform_below(rng, p));
  return prufer_decode(seq);
}

inline Graph random_tree(std::size_t p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_tree(p, rng);
}

struct ConnectedSplit {
  Edge edge;
  VertexSet small_side;
  VertexSet large_side;
  std::size_t imbalance = 0;
};

namespace detail {

// For each tree edge, the size of the side not containing vertex 0.
inline std::vector<std::pair<Edge, std::size_t>> edge_split_sizes(const Graph& t) {
  require_tree(t);
  const std::size_t n = t.order();
  std::vector<Vertex> parent(n, kNoVertex), order{0};
  parent[0] = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Vertex w : t.neighbors(order[i]))
      if (parent[w] == kNoVertex) {
        parent[w] = order[i];
        order.push_back(w);
      }
  std::vector<std::size_t> subtree(n, 1);
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (*it != 0) subtree[parent[*it]] += subtree[*it];
  std::vector<std::pair<Edge, std::size_t>> out;
  for (const auto& e : t.edges()) {
    Vertex child = parent[e.v] == e.u ? e.v : e.u;
    out.emplace_back(e, subtree[child]);
  }
  return out;
}

inline std::size_t abs_diff(std::size_t a, std::size_t b) { return a > b ? a - b : b - a; }

}  // namespace detail

inline ConnectedSplit make_split(const Graph& t, const Edge& e) {
  auto comps = split_by_edge_deletion(t, {e});
  if (comps.size() != 2) throw Error("edge " + to_string(e) + " is not a bridge");
  ConnectedSplit split;
  split.edge = e;
  bool first_small = comps[0].size() <= comps[1].size();
  split.small_side = first_small ? comps[0] : comps[1];
  split.large_side = first_small ? comps[1] : comps[0];
  split.imbalance = split.large_side.size() - split.small_side.size();
  return split;
}

struct ConnectedSplitResult {
  std::size_t value = 0;
  ConnectedSplit witness;
};

// C(T): least imbalance over single-edge splits; first minimizing edge in edge order.
inline ConnectedSplitResult connected_split_min(const Graph& t) {
  if (t.order() < 2) throw Error("C(T) needs order >= 2");
  const std::size_t n = t.order();
  std::optional<std::pair<Edge, std::size_t>> best;
  for (auto [e, s] : detail::edge_split_sizes(t)) {
    std::size_t imb = detail::abs_diff(n - s, s);
    if (!best || imb < best->second) best = {e, imb};
  }
  return {best->second, make_split(t, best->first)};
}

// Every edge attaining C(T), in edge order.
inline std::vector<Edge> connected_split_minimizers(const Graph& t) {
  std::size_t value = connected_split_min(t).value;
  std::vector<Edge> out;
  for (auto [e, s] : detail::edge_split_sizes(t))
    if (detail::abs_diff(t.order() - s, s) == value) out.push_back(e);
  return out;
}

// C(T, a): as C(T) but only over splits with a side of at most a vertices.
// nullopt when no split qualifies.
inline std::optional<std::size_t> bounded_connected_split(const Graph& t, std::size_t a) {
  if (t.order() < 2) throw Error("C(T, a) needs order >= 2");
  if (a < 1) throw Error("C(T, a) needs a >= 1");
  const std::size_t n = t.order();
  std::optional<std::size_t> best;
  for (auto [e, s] : detail::edge_split_sizes(t)) {
    std::size_t small = std::min(s, n - s);
    if (small > a) continue;
    std::size_t imb = n - 2 * small;
    if (!best || imb < *best) best = imb;
  }
  return best;
}

struct BranchDecomposition {
  Vertex anchor = 0;
  std::size_t degree = 0;
  std::size_t delta = 0;
  // Components of T - anchor: decreasing size, then canonical code, then least id.
  std::vector<VertexSet> secondary_branches;

  std::vector<std::size_t> sizes() const {
    std::vector<std::size_t> out;
    for (const auto& b : secondary_branches) out.push_back(b.size());
    return out;
  }
};

inline BranchDecomposition branch_decomposition(const Graph& t, Vertex anchor) {
  require_tree(t);
  if (anchor >= t.order()) throw Error("anchor out of range");
  std::vector<Edge> incident;
  for (Vertex w : t.neighbors(anchor)) incident.push_back(Edge::make(anchor, w));
  std::vector<std::pair<std::string, VertexSet>> keyed;
  for (auto& comp : split_by_edge_deletion(t, incident)) {
    if (comp.size() == 1 && comp.front() == anchor) continue;
    keyed.emplace_back(canonical_tree_code(t.induced(comp)), std::move(comp));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.second.size() != b.second.size()) return a.second.size() > b.second.size();
    if (a.first != b.first) return a.first < b.first;
    return a.second.front() < b.second.front();
  });
  BranchDecomposition out;
  out.anchor = anchor;
  out.degree = t.degree(anchor);
  out.delta = t.max_degree();
  for (auto& [code, comp] : keyed) out.secondary_branches.push_back(std::move(comp));
  return out;
}

// The upper-bound labeling for S_m(l): the whole long leg and floor(p/2)-l of the
// pendant leaves take even labels, the centre and everything else odd.
inline ParitySignature spider_base_signature(std::size_t m, std::size_t l) {
  if (m < 2 || l < 2) throw Error("spider base signature needs m >= 2 and l >= 2");
  const std::size_t p = m + l;
  if (l > p / 2) throw Error("spider base signature needs l <= floor((m+l)/2)");
  Graph g = spider(m, l);
  std::vector<Vertex> even{1};
  for (Vertex v = static_cast<Vertex>(m + 1); v < p; ++v) even.push_back(v);
  for (Vertex leaf = 2; even.size() < p / 2; ++leaf) even.push_back(leaf);
  std::vector<Vertex> odd;
  VertexSet even_set(std::move(even));
  for (Vertex v = 0; v < p; ++v)
    if (!even_set.contains(v)) odd.push_back(v);
  return signature_from_bipartition(g, Bipartition{std::move(even_set), VertexSet(std::move(odd))});
}

// Triangle b,c,d with a pendant a at b and e at d; ids a..e = 0..4.
inline Graph triangle_with_pendants() { return Graph(5, {{0, 1}, {1, 2}, {1, 3}, {2, 3}, {3, 4}}); }

// Every connected labeled graph on p <= 7 vertices, by adjacency bitmask.
inline void for_each_connected_graph(std::size_t p, const std::function<void(const Graph&)>& visit) {
  if (p < 1 || p > 7) throw CapError("connected-graph enumeration supports 1 <= p <= 7");
  std::vector<Edge> slots;
  for (Vertex j = 1; j < p; ++j)
    for (Vertex i = 0; i < j; ++i) slots.push_back(Edge{i, j});
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t b = 0; b < slots.size(); ++b)
      if (mask >> b & 1) edges.push_back(slots[b]);
    Graph g(p, std::move(edges));
    if (is_connected(g)) visit(g);
  }
}

// A random tree plus `extra` distinct random chords.
inline Graph random_connected_graph(std::size_t p, std::size_t extra, std::mt19937_64& rng) {
  Graph t = p == 1 ? Graph(1) : random_tree(p, rng);
  const std::size_t room = p * (p - 1) / 2 - t.size();
  extra = std::min(extra, room);
  std::vector<Edge> added;
  while (added.size() < extra) {
    Vertex a = static_cast<Vertex>(detail::uniform_below(rng, p));
    Vertex b = static_cast<Vertex>(detail::uniform_below(rng, p));
    if (a == b) continue;
    Edge e = Edge::make(a, b);
    if (t.has_edge(e.u, e.v) || std::find(added.begin(), added.end(), e) != added.end()) continue;
    added.push_back(e);
  }
  return t.with_edges(added);
}

}  // namespace rnalab
