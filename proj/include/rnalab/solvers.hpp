#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "rnalab/graph.hpp"
#include "rnalab/parity.hpp"

namespace rnalab {

enum class Method { bruteforce, tree_dp, factorial_oracle };

inline std::string_view to_string(Method m) {
  switch (m) {
    case Method::bruteforce: return "bruteforce";
    case Method::tree_dp: return "tree_dp";
    case Method::factorial_oracle: return "factorial_oracle";
  }
  return "unknown";
}

struct SolverConfig {
  std::size_t brute_cap = 28;
  std::size_t oracle_cap = 8;
};

// rna value with a Harary witness attaining it. v1 of the witness always holds
// floor(p/2) vertices.
struct RnaCertificate {
  std::size_t value = 0;
  Bipartition witness;
  ParitySignature witness_signature{std::vector<std::size_t>{1}};
  Method method = Method::bruteforce;
};

inline RnaCertificate make_certificate(const Graph& g, Bipartition witness, Method method) {
  RnaCertificate cert;
  cert.value = cut_size(g, witness);
  cert.witness_signature = signature_from_bipartition(g, witness);
  cert.witness = std::move(witness);
  cert.method = method;
  return cert;
}

inline bool certificate_is_consistent(const Graph& g, const RnaCertificate& cert) {
  try {
    return cert.witness.is_harary() && cut_size(g, cert.witness) == cert.value &&
           sign_edges(g, cert.witness_signature).negative.size() == cert.value;
  } catch (const Error&) {
    return false;
  }
}

namespace detail {

inline void require_rna_input(const Graph& g) {
  if (g.order() < 2) throw Error("rna needs a graph with at least 2 vertices");
  require_connected(g);
}

// Set-lexicographic order on sorted member lists.
inline bool lex_less(std::uint64_t a, std::uint64_t b) {
  std::uint64_t diff = a ^ b;
  return diff != 0 && (a & (diff & (~diff + 1))) != 0;
}

inline std::size_t mask_cut(const std::vector<std::uint64_t>& adj, std::uint64_t side) {
  std::size_t cut = 0;
  for (std::uint64_t rest = side; rest != 0; rest &= rest - 1)
    cut += static_cast<std::size_t>(std::popcount(adj[std::countr_zero(rest)] & ~side));
  return cut;
}

// Calls visit(mask) for every floor(p/2)-subset; for even p only those holding vertex 0,
// which covers each unordered split once.
template <class Visit>
void for_each_balanced_side(std::size_t p, Visit&& visit) {
  const std::size_t k = p / 2;
  const bool pin = p % 2 == 0;
  const std::size_t bits = pin ? p - 1 : p;
  const std::size_t choose = pin ? k - 1 : k;
  auto emit = [&](std::uint64_t sub) { visit(pin ? ((sub << 1) | 1) : sub); };
  if (choose == 0) {
    emit(0);
    return;
  }
  const std::uint64_t limit = std::uint64_t{1} << bits;
  std::uint64_t x = (std::uint64_t{1} << choose) - 1;
  while (x < limit) {
    emit(x);
    std::uint64_t c = x & (~x + 1);
    std::uint64_t r = x + c;
    x = (((r ^ x) >> 2) / c) | r;
  }
}

inline void require_brute_cap(const Graph& g, const SolverConfig& cfg) {
  if (g.order() > cfg.brute_cap)
    throw CapError("order " + std::to_string(g.order()) + " exceeds the brute-force cap of " +
                   std::to_string(cfg.brute_cap) + "; use tree_dp for trees");
}

}  // namespace detail

// Minimum cut over all floor(p/2)-subsets; the witness is the lexicographically
// least minimizing subset.
inline RnaCertificate rna_bruteforce(const Graph& g, const SolverConfig& cfg = {}) {
  detail::require_rna_input(g);
  detail::require_brute_cap(g, cfg);
  const auto adj = g.adjacency_masks();
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::uint64_t best_side = 0;
  detail::for_each_balanced_side(g.order(), [&](std::uint64_t side) {
    std::size_t cut = detail::mask_cut(adj, side);
    if (cut < best || (cut == best && detail::lex_less(side, best_side))) {
      best = cut;
      best_side = side;
    }
  });
  return make_certificate(g, bipartition_from_mask(g.order(), best_side), Method::bruteforce);
}

// Every minimum balanced split, v1 = the floor(p/2) side, in lexicographic order
// of v1. For even p each unordered split appears once (v1 holds vertex 0).
inline std::vector<Bipartition> all_optimal_bisections(const Graph& g, const SolverConfig& cfg = {}) {
  detail::require_rna_input(g);
  detail::require_brute_cap(g, cfg);
  const auto adj = g.adjacency_masks();
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::vector<std::uint64_t> sides;
  detail::for_each_balanced_side(g.order(), [&](std::uint64_t side) {
    std::size_t cut = detail::mask_cut(adj, side);
    if (cut < best) {
      best = cut;
      sides.clear();
    }
    if (cut == best) sides.push_back(side);
  });
  std::sort(sides.begin(), sides.end(), detail::lex_less);
  std::vector<Bipartition> out;
  out.reserve(sides.size());
  for (auto side : sides) out.push_back(bipartition_from_mask(g.order(), side));
  return out;
}

// Rooted subtree knapsack: cost[v][colour][k] is the fewest crossing edges inside
// the subtree of v when v has `colour` and k subtree vertices lie on side 1.
inline RnaCertificate rna_tree_dp(const Graph& t) {
  require_tree(t);
  if (t.order() < 2) throw Error("rna needs a graph with at least 2 vertices");
  using Table = std::array<std::vector<std::size_t>, 2>;
  constexpr std::size_t inf = std::numeric_limits<std::size_t>::max() / 4;
  const std::size_t n = t.order();
  const std::size_t target = n / 2;

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

  std::vector<std::vector<Vertex>> children(n);
  for (Vertex v : order)
    if (v != 0) children[parent[v]].push_back(v);
  for (auto& kids : children)
    std::stable_sort(kids.begin(), kids.end(), [&](Vertex a, Vertex b) { return subtree[a] > subtree[b]; });

  // history[v][i]: table of v after merging its first i children.
  std::vector<std::vector<Table>> history(n);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Vertex v = *it;
    Table cur;
    cur[0] = {0, inf};
    cur[1] = {inf, 0};
    history[v].push_back(cur);
    for (Vertex w : children[v]) {
      const Table& child = history[w].back();
      const std::size_t cap_a = cur[0].size() - 1;
      const std::size_t cap_b = child[0].size() - 1;
      const std::size_t cap = std::min(cap_a + cap_b, target);
      Table merged;
      for (int c = 0; c < 2; ++c) {
        merged[c].assign(cap + 1, inf);
        for (std::size_t a = 0; a <= cap_a; ++a) {
          if (cur[c][a] >= inf) continue;
          for (std::size_t b = 0; b <= cap_b && a + b <= cap; ++b)
            for (int cw = 0; cw < 2; ++cw) {
              std::size_t val = cur[c][a] + child[cw][b] + (c != cw ? 1 : 0);
              merged[c][a + b] = std::min(merged[c][a + b], val);
            }
        }
      }
      cur = std::move(merged);
      history[v].push_back(cur);
    }
  }

  const Table& root = history[0].back();
  int root_colour = root[1][target] <= root[0][target] ? 1 : 0;

  std::vector<int> colour(n, 0);
  struct Frame {
    Vertex v;
    int c;
    std::size_t k;
  };
  std::vector<Frame> stack{{0, root_colour, target}};
  while (!stack.empty()) {
    auto [v, c, k] = stack.back();
    stack.pop_back();
    colour[v] = c;
    for (std::size_t i = children[v].size(); i-- > 0;) {
      Vertex w = children[v][i];
      const Table& before = history[v][i];
      const Table& child = history[w].back();
      const std::size_t want = history[v][i + 1][c][k];
      bool found = false;
      for (std::size_t b = 0; b <= std::min(k, child[0].size() - 1) && !found; ++b) {
        std::size_t a = k - b;
        if (a >= before[c].size() || before[c][a] >= inf) continue;
        for (int cw = 0; cw < 2 && !found; ++cw) {
          if (before[c][a] + child[cw][b] + (c != cw ? 1 : 0) == want) {
            stack.push_back({w, cw, b});
            k = a;
            found = true;
          }
        }
      }
      if (!found) throw Error("tree dp backtracking failed");
    }
  }

  std::vector<Vertex> side1, side2;
  for (Vertex v = 0; v < n; ++v) (colour[v] == 1 ? side1 : side2).push_back(v);
  return make_certificate(t, Bipartition{VertexSet(std::move(side1)), VertexSet(std::move(side2))}, Method::tree_dp);
}

inline RnaCertificate rna(const Graph& g, const SolverConfig& cfg = {}) {
  if (is_tree(g) && g.order() >= 2) return rna_tree_dp(g);
  return rna_bruteforce(g, cfg);
}

// Literal minimum of |E^-| over all p! labelings. Validation only.
inline std::size_t rna_factorial_oracle(const Graph& g, const SolverConfig& cfg = {}) {
  if (g.order() > cfg.oracle_cap)
    throw CapError("order " + std::to_string(g.order()) + " exceeds the factorial-oracle cap of " +
                   std::to_string(cfg.oracle_cap));
  std::vector<std::size_t> labels(g.order());
  std::iota(labels.begin(), labels.end(), std::size_t{1});
  std::size_t best = std::numeric_limits<std::size_t>::max();
  do {
    std::size_t negative = 0;
    for (const auto& e : g.edges()) negative += (labels[e.u] ^ labels[e.v]) & 1;
    best = std::min(best, negative);
  } while (std::next_permutation(labels.begin(), labels.end()));
  return best;
}

}  // namespace rnalab
