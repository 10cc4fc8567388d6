#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rnalab/error.hpp"

namespace rnalab {

using Vertex = std::uint32_t;
inline constexpr Vertex kNoVertex = ~Vertex{0};

// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  static Edge make(Vertex a, Vertex b) {
    if (a == b) throw Error("self-loop at vertex " + std::to_string(a));
    return a < b ? Edge{a, b} : Edge{b, a};
  }

  bool touches(Vertex x) const noexcept { return u == x || v == x; }
  Vertex other(Vertex x) const noexcept { return x == u ? v : u; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline std::string to_string(const Edge& e) {
  return std::to_string(e.u) + "-" + std::to_string(e.v);
}

// Strictly increasing list of distinct vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> ids) : VertexSet(std::vector<Vertex>(ids)) {}
  explicit VertexSet(std::vector<Vertex> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    if (std::adjacent_find(ids_.begin(), ids_.end()) != ids_.end())
      throw Error("vertex set contains a duplicate id");
  }

  // Members of a bitmask, for orders up to 64.
  static VertexSet from_mask(std::uint64_t mask) {
    VertexSet s;
    while (mask != 0) {
      s.ids_.push_back(static_cast<Vertex>(std::countr_zero(mask)));
      mask &= mask - 1;
    }
    return s;
  }

  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }
  Vertex front() const { return ids_.front(); }
  Vertex operator[](std::size_t i) const { return ids_[i]; }
  auto begin() const noexcept { return ids_.begin(); }
  auto end() const noexcept { return ids_.end(); }
  const std::vector<Vertex>& ids() const noexcept { return ids_; }

  bool contains(Vertex x) const { return std::binary_search(ids_.begin(), ids_.end(), x); }

  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> ids_;
};

// Simple undirected graph on vertices 0..order-1. Immutable after construction.
class Graph {
 public:
  explicit Graph(std::size_t order, std::vector<Edge> edges = {}) : order_(order), edges_(std::move(edges)) {
    if (order_ == 0) throw Error("graph order must be at least 1");
    for (auto& e : edges_) {
      e = Edge::make(e.u, e.v);
      if (e.v >= order_)
        throw Error("edge " + to_string(e) + " out of range for order " + std::to_string(order_));
    }
    std::sort(edges_.begin(), edges_.end());
    if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end())
      throw Error("duplicate edge " + to_string(*dup));
    adjacency_.resize(order_);
    for (const auto& e : edges_) {
      adjacency_[e.u].push_back(e.v);
      adjacency_[e.v].push_back(e.u);
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
  }

  Graph(std::size_t order, std::initializer_list<std::pair<Vertex, Vertex>> pairs)
      : Graph(order, to_edges(pairs)) {}

  std::size_t order() const noexcept { return order_; }
  std::size_t size() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

  std::size_t max_degree() const {
    std::size_t best = 0;
    for (const auto& nbrs : adjacency_) best = std::max(best, nbrs.size());
    return best;
  }

  bool has_edge(Vertex a, Vertex b) const {
    if (a >= order_ || b >= order_) return false;
    const auto& nbrs = adjacency_[a];
    return std::binary_search(nbrs.begin(), nbrs.end(), b);
  }

  bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }

  // Neighbourhood bitmask per vertex; only valid for order <= 64.
  std::vector<std::uint64_t> adjacency_masks() const {
    if (order_ > 64) throw CapError("adjacency masks need order <= 64");
    std::vector<std::uint64_t> masks(order_, 0);
    for (const auto& e : edges_) {
      masks[e.u] |= std::uint64_t{1} << e.v;
      masks[e.v] |= std::uint64_t{1} << e.u;
    }
    return masks;
  }

  // Subgraph induced by `keep`, relabelled by rank within `keep`.
  Graph induced(const VertexSet& keep) const {
    std::vector<Vertex> rank(order_, kNoVertex);
    for (std::size_t i = 0; i < keep.size(); ++i) rank.at(keep[i]) = static_cast<Vertex>(i);
    std::vector<Edge> kept;
    for (const auto& e : edges_)
      if (rank[e.u] != kNoVertex && rank[e.v] != kNoVertex) kept.push_back(Edge::make(rank[e.u], rank[e.v]));
    return Graph(keep.size(), std::move(kept));
  }

  Graph without_vertex(Vertex x) const {
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < order_; ++v)
      if (v != x) keep.push_back(v);
    return induced(VertexSet(std::move(keep)));
  }

  Graph with_edges(std::span<const Edge> extra) const {
    std::vector<Edge> all = edges_;
    all.insert(all.end(), extra.begin(), extra.end());
    return Graph(order_, std::move(all));
  }

  // Same graph with vertex v renamed to perm[v].
  Graph relabeled(std::span<const Vertex> perm) const {
    if (perm.size() != order_) throw Error("relabeling has wrong length");
    std::vector<Edge> moved;
    moved.reserve(edges_.size());
    for (const auto& e : edges_) moved.push_back(Edge::make(perm[e.u], perm[e.v]));
    return Graph(order_, std::move(moved));
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order_ == b.order_ && a.edges_ == b.edges_;
  }

 private:
  static std::vector<Edge> to_edges(std::initializer_list<std::pair<Vertex, Vertex>> pairs) {
    std::vector<Edge> out;
    for (auto [a, b] : pairs) out.push_back(Edge::make(a, b));
    return out;
  }

  std::size_t order_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

namespace detail {

// Union-find used by component and spanning-tree routines.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

}  // namespace detail

inline bool is_connected(const Graph& g) {
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == g.order();
}

inline bool is_tree(const Graph& g) { return g.size() + 1 == g.order() && is_connected(g); }

inline void require_connected(const Graph& g) {
  if (!is_connected(g)) throw Error("graph not connected");
}

inline void require_tree(const Graph& g) {
  if (!is_tree(g)) throw Error("graph is not a tree");
}

// Cut-edges by a single iterative DFS with low-link values. Sorted output.
inline std::vector<Edge> bridges(const Graph& g) {
  require_connected(g);
  const std::size_t n = g.order();
  std::vector<std::size_t> disc(n, 0), low(n, 0), next_child(n, 0);
  std::vector<Vertex> parent(n, kNoVertex);
  std::vector<Edge> out;
  std::size_t timer = 1;

  std::vector<Vertex> stack{0};
  disc[0] = low[0] = timer++;
  while (!stack.empty()) {
    Vertex v = stack.back();
    auto nbrs = g.neighbors(v);
    if (next_child[v] < nbrs.size()) {
      Vertex w = nbrs[next_child[v]++];
      if (disc[w] == 0) {
        parent[w] = v;
        disc[w] = low[w] = timer++;
        stack.push_back(w);
      } else if (w != parent[v]) {
        low[v] = std::min(low[v], disc[w]);
      }
      continue;
    }
    stack.pop_back();
    if (Vertex p = parent[v]; p != kNoVertex) {
      low[p] = std::min(low[p], low[v]);
      if (low[v] > disc[p]) out.push_back(Edge::make(p, v));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Connected components after deleting `removed`, ordered by smallest member.
inline std::vector<VertexSet> split_by_edge_deletion(const Graph& g, std::span<const Edge> removed) {
  std::vector<Edge> gone(removed.begin(), removed.end());
  for (auto& e : gone) {
    e = Edge::make(e.u, e.v);
    if (!g.has_edge(e)) throw Error("edge " + to_string(e) + " is not in the graph");
  }
  std::sort(gone.begin(), gone.end());

  detail::DisjointSets sets(g.order());
  for (const auto& e : g.edges())
    if (!std::binary_search(gone.begin(), gone.end(), e)) sets.unite(e.u, e.v);

  std::vector<std::size_t> slot(g.order(), g.order());
  std::vector<std::vector<Vertex>> groups;
  for (Vertex v = 0; v < g.order(); ++v) {
    std::size_t root = sets.find(v);
    if (slot[root] == g.order()) {
      slot[root] = groups.size();
      groups.emplace_back();
    }
    groups[slot[root]].push_back(v);
  }
  // Vertices are visited in increasing order, so groups are already sorted by minimum.
  std::vector<VertexSet> out;
  out.reserve(groups.size());
  for (auto& grp : groups) out.emplace_back(std::move(grp));
  return out;
}

inline std::vector<VertexSet> split_by_edge_deletion(const Graph& g, std::initializer_list<Edge> removed) {
  return split_by_edge_deletion(g, std::span<const Edge>(removed.begin(), removed.size()));
}

inline std::vector<VertexSet> components(const Graph& g) { return split_by_edge_deletion(g, std::span<const Edge>{}); }

// Index of the component containing v.
inline std::size_t component_of(const std::vector<VertexSet>& comps, Vertex v) {
  for (std::size_t i = 0; i < comps.size(); ++i)
    if (comps[i].contains(v)) return i;
  throw Error("vertex " + std::to_string(v) + " not in any component");
}

}  // namespace rnalab
