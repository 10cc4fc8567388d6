#pragma once

#include <cstddef>
#include <vector>

#include "rnalab/graph.hpp"

namespace rnalab {

struct SpanningLimits {
  std::size_t max_order = 10;
  std::size_t max_trees = 100000;
};

// Every spanning tree of a connected graph, by include/exclude branching on edges.
// An edge is excluded only while the remaining edges can still span.
inline std::vector<Graph> spanning_trees(const Graph& g, SpanningLimits limits = {}) {
  require_connected(g);
  if (g.order() > limits.max_order)
    throw CapError("spanning-tree enumeration is capped at order " + std::to_string(limits.max_order));
  const auto& edges = g.edges();
  const std::size_t n = g.order();
  std::vector<std::vector<Edge>> out;
  std::vector<Edge> chosen;

  auto spans = [&](std::size_t from) {
    detail::DisjointSets sets(n);
    std::size_t parts = n;
    for (const auto& e : chosen) parts -= sets.unite(e.u, e.v) ? 1 : 0;
    for (std::size_t i = from; i < edges.size() && parts > 1; ++i)
      parts -= sets.unite(edges[i].u, edges[i].v) ? 1 : 0;
    return parts == 1;
  };
  auto joins_new = [&](const Edge& e) {
    detail::DisjointSets sets(n);
    for (const auto& c : chosen) sets.unite(c.u, c.v);
    return sets.find(e.u) != sets.find(e.v);
  };

  auto recurse = [&](auto&& self, std::size_t i) -> void {
    if (chosen.size() + 1 == n) {
      if (out.size() >= limits.max_trees)
        throw CapError("more than " + std::to_string(limits.max_trees) + " spanning trees");
      out.push_back(chosen);
      return;
    }
    if (i == edges.size()) return;
    if (joins_new(edges[i])) {
      chosen.push_back(edges[i]);
      self(self, i + 1);
      chosen.pop_back();
    }
    if (spans(i + 1)) self(self, i + 1);
  };
  recurse(recurse, 0);

  std::vector<Graph> trees;
  trees.reserve(out.size());
  for (auto& t : out) trees.emplace_back(n, std::move(t));
  return trees;
}

}  // namespace rnalab
