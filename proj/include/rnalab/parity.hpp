#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <utility>
#include <vector>

#include "rnalab/graph.hpp"

namespace rnalab {

// Bijective labeling of V(G) onto 1..p. Edge uv is negative iff the labels of u
// and v differ in parity.
class ParitySignature {
 public:
  explicit ParitySignature(std::vector<std::size_t> labels) : labels_(std::move(labels)) {
    std::vector<char> used(labels_.size() + 1, 0);
    for (std::size_t label : labels_) {
      if (label < 1 || label > labels_.size() || used[label])
        throw Error("labels must be a bijection onto 1.." + std::to_string(labels_.size()));
      used[label] = 1;
    }
  }

  std::size_t order() const noexcept { return labels_.size(); }
  std::size_t label(Vertex v) const { return labels_.at(v); }
  bool is_even(Vertex v) const { return labels_.at(v) % 2 == 0; }
  const std::vector<std::size_t>& labels() const noexcept { return labels_; }

  friend bool operator==(const ParitySignature&, const ParitySignature&) = default;

 private:
  std::vector<std::size_t> labels_;
};

struct SignedEdgeSet {
  std::vector<Edge> negative;
  std::vector<Edge> positive;
};

// Ordered pair of non-empty classes covering V(G).
struct Bipartition {
  VertexSet v1;
  VertexSet v2;

  bool is_harary() const {
    std::size_t a = v1.size(), b = v2.size();
    return (a > b ? a - b : b - a) <= 1;
  }

  friend auto operator<=>(const Bipartition&, const Bipartition&) = default;
};

inline void validate_bipartition(const Graph& g, const Bipartition& b) {
  if (b.v1.empty() || b.v2.empty()) throw Error("bipartition classes must be non-empty");
  if (b.v1.size() + b.v2.size() != g.order()) throw Error("bipartition does not cover the vertex set exactly");
  std::vector<char> seen(g.order(), 0);
  for (const VertexSet* cls : {&b.v1, &b.v2})
    for (Vertex v : *cls) {
      if (v >= g.order()) throw Error("bipartition vertex " + std::to_string(v) + " out of range");
      if (seen[v]) throw Error("bipartition classes overlap at vertex " + std::to_string(v));
      seen[v] = 1;
    }
}

inline Bipartition bipartition_from_mask(std::size_t order, std::uint64_t side) {
  std::uint64_t all = order == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << order) - 1;
  return Bipartition{VertexSet::from_mask(side), VertexSet::from_mask(all & ~side)};
}

inline SignedEdgeSet sign_edges(const Graph& g, const ParitySignature& f) {
  if (f.order() != g.order()) throw Error("signature order does not match graph order");
  SignedEdgeSet out;
  for (const auto& e : g.edges()) (f.is_even(e.u) != f.is_even(e.v) ? out.negative : out.positive).push_back(e);
  return out;
}

inline std::vector<Edge> crossing_edges(const Graph& g, const Bipartition& b) {
  validate_bipartition(g, b);
  std::vector<Edge> out;
  for (const auto& e : g.edges())
    if (b.v1.contains(e.u) != b.v1.contains(e.v)) out.push_back(e);
  return out;
}

inline std::size_t cut_size(const Graph& g, const Bipartition& b) { return crossing_edges(g, b).size(); }

// The class receiving even labels: the smaller class for odd p, the class
// without vertex 0 for even p. Labels rise with vertex id inside each class.
inline ParitySignature signature_from_bipartition(const Graph& g, const Bipartition& b) {
  validate_bipartition(g, b);
  if (!b.is_harary()) throw Error("bipartition is not Harary");
  const bool v1_even = g.order() % 2 == 1 ? b.v1.size() < b.v2.size() : !b.v1.contains(0);
  const VertexSet& even = v1_even ? b.v1 : b.v2;
  const VertexSet& odd = v1_even ? b.v2 : b.v1;
  std::vector<std::size_t> labels(g.order(), 0);
  std::size_t next = 2;
  for (Vertex v : even) labels[v] = std::exchange(next, next + 2);
  next = 1;
  for (Vertex v : odd) labels[v] = std::exchange(next, next + 2);
  return ParitySignature(std::move(labels));
}

// v1 = even-labelled vertices (floor(p/2) of them), v2 = odd-labelled.
inline Bipartition bipartition_from_signature(const Graph& g, const ParitySignature& f) {
  if (f.order() != g.order()) throw Error("signature order does not match graph order");
  std::vector<Vertex> even, odd;
  for (Vertex v = 0; v < g.order(); ++v) (f.is_even(v) ? even : odd).push_back(v);
  return Bipartition{VertexSet(std::move(even)), VertexSet(std::move(odd))};
}

}  // namespace rnalab
