#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "rnalab/graph.hpp"

namespace rnalab {

inline constexpr std::size_t kDefaultEnumerationCap = 11;

// Labeled tree on len(seq)+2 vertices.
inline Graph prufer_decode(const std::vector<Vertex>& seq) {
  const std::size_t n = seq.size() + 2;
  std::vector<std::size_t> degree(n, 1);
  for (Vertex x : seq) {
    if (x >= n) throw Error("prufer entry " + std::to_string(x) + " out of range for order " + std::to_string(n));
    ++degree[x];
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  // Linear-time decode: `ptr` scans for the next smallest leaf, `leaf` may jump back.
  std::size_t ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  std::size_t leaf = ptr;
  for (Vertex x : seq) {
    edges.push_back(Edge::make(static_cast<Vertex>(leaf), x));
    degree[leaf] = 0;
    if (--degree[x] == 1 && x < ptr) {
      leaf = x;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.push_back(Edge::make(static_cast<Vertex>(leaf), static_cast<Vertex>(n - 1)));
  return Graph(n, std::move(edges));
}

inline std::vector<Vertex> prufer_encode(const Graph& t) {
  require_tree(t);
  const std::size_t n = t.order();
  if (n < 2) throw Error("prufer encoding needs order >= 2");
  std::vector<std::size_t> degree(n);
  for (Vertex v = 0; v < n; ++v) degree[v] = t.degree(v);
  std::vector<char> removed(n, 0);
  std::vector<Vertex> seq;
  seq.reserve(n - 2);
  std::size_t ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  Vertex leaf = static_cast<Vertex>(ptr);
  for (std::size_t step = 0; step + 2 < n; ++step) {
    removed[leaf] = 1;
    Vertex parent = kNoVertex;
    for (Vertex w : t.neighbors(leaf))
      if (!removed[w]) parent = w;
    seq.push_back(parent);
    if (--degree[parent] == 1 && parent < ptr) {
      leaf = parent;
    } else {
      ++ptr;
      while (removed[ptr] || degree[ptr] != 1) ++ptr;
      leaf = static_cast<Vertex>(ptr);
    }
  }
  return seq;
}

namespace detail {

// One or two centres, found by peeling leaves.
inline std::vector<Vertex> tree_centers(const Graph& t) {
  const std::size_t n = t.order();
  if (n == 1) return {0};
  std::vector<std::size_t> degree(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = t.degree(v);
    if (degree[v] <= 1) layer.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<Vertex> next;
    for (Vertex v : layer)
      for (Vertex w : t.neighbors(v))
        if (--degree[w] == 1) next.push_back(w);
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

inline std::string rooted_code(const Graph& t, Vertex root) {
  const std::size_t n = t.order();
  std::vector<Vertex> parent(n, kNoVertex), order;
  order.reserve(n);
  order.push_back(root);
  parent[root] = root;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Vertex w : t.neighbors(order[i]))
      if (parent[w] == kNoVertex) {
        parent[w] = order[i];
        order.push_back(w);
      }
  std::vector<std::vector<std::string>> child_codes(n);
  std::vector<std::string> code(n);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Vertex v = *it;
    auto& kids = child_codes[v];
    std::sort(kids.begin(), kids.end());
    std::string c = "(";
    for (const auto& k : kids) c += k;
    c += ')';
    if (v != root) child_codes[parent[v]].push_back(std::move(c));
    else code[v] = std::move(c);
  }
  return code[root];
}

}  // namespace detail

// AHU code rooted at the centre (the lexicographically smaller one for bicentral
// trees). Equal codes iff the trees are isomorphic.
inline std::string canonical_tree_code(const Graph& t) {
  require_tree(t);
  std::string best;
  for (Vertex c : detail::tree_centers(t)) {
    std::string code = detail::rooted_code(t, c);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

// Inverse of a rooted code: vertices numbered in preorder, root 0.
inline Graph tree_from_code(const std::string& code) {
  std::vector<Edge> edges;
  std::vector<Vertex> open;
  Vertex next = 0;
  for (char ch : code) {
    if (ch == '(') {
      if (!open.empty()) edges.push_back(Edge::make(open.back(), next));
      open.push_back(next++);
    } else if (ch == ')') {
      if (open.empty()) throw Error("unbalanced tree code");
      open.pop_back();
    } else {
      throw Error("invalid character in tree code");
    }
  }
  if (!open.empty() || next == 0) throw Error("unbalanced tree code");
  return Graph(next, std::move(edges));
}

namespace detail {

inline void require_order_within_cap(std::size_t p, std::size_t cap) {
  if (p < 1) throw Error("tree order must be at least 1");
  if (p > cap)
    throw CapError("free-tree enumeration is capped at order " + std::to_string(cap) + " (requested " +
                   std::to_string(p) + ")");
}

}  // namespace detail

// Codes of all free trees of order p, from leaf extension of order p-1 trees.
inline std::set<std::string> free_tree_codes(std::size_t p, std::size_t cap = kDefaultEnumerationCap) {
  detail::require_order_within_cap(p, cap);
  std::set<std::string> level{"()"};
  for (std::size_t order = 2; order <= p; ++order) {
    std::set<std::string> next;
    for (const auto& code : level) {
      Graph base = tree_from_code(code);
      for (Vertex v = 0; v < base.order(); ++v) {
        std::vector<Edge> edges = base.edges();
        edges.push_back(Edge::make(v, static_cast<Vertex>(base.order())));
        next.insert(canonical_tree_code(Graph(base.order() + 1, std::move(edges))));
      }
    }
    level = std::move(next);
  }
  return level;
}

// One representative per isomorphism class, ordered by canonical code.
inline std::vector<Graph> enumerate_free_trees(std::size_t p, std::size_t cap = kDefaultEnumerationCap) {
  std::vector<Graph> out;
  for (const auto& code : free_tree_codes(p, cap)) out.push_back(tree_from_code(code));
  return out;
}

// Visits every labeled tree on p >= 2 vertices via its Prüfer sequence.
inline void for_each_labeled_tree(std::size_t p, const std::function<void(const Graph&)>& visit) {
  if (p < 2) throw Error("labeled tree enumeration needs order >= 2");
  std::vector<Vertex> seq(p - 2, 0);
  while (true) {
    visit(prufer_decode(seq));
    std::size_t i = 0;
    while (i < seq.size() && ++seq[i] == p) seq[i++] = 0;
    if (i == seq.size()) break;
  }
}

// Independent route to the same classes: every labeled tree, deduplicated by code.
inline std::set<std::string> free_tree_codes_by_prufer(std::size_t p, std::size_t cap = 9) {
  detail::require_order_within_cap(p, cap);
  if (p == 1) return {"()"};
  std::set<std::string> codes;
  for_each_labeled_tree(p, [&](const Graph& t) { codes.insert(canonical_tree_code(t)); });
  return codes;
}

}  // namespace rnalab
