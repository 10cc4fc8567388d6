#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "rnalab/families.hpp"
#include "rnalab/parallel.hpp"
#include "rnalab/theorems.hpp"

namespace rnalab {

inline const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids{
      "tree-upper-bound", "connected-split-bound", "rna1-iff",      "star-extremal",  "small-tree",
      "pendant-monotone", "arith-lemma",           "delta-bound",   "kary-odd",       "kary-even",
      "spider-formula",   "partition-coverage",    "spanning-rna1", "rna2-sufficient", "rna2-cycle",
      "rna2-incident",    "rna2-nonincident"};
  return ids;
}

inline bool is_theorem_id(const std::string& id) {
  const auto& ids = theorem_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

struct SuiteConfig {
  std::vector<std::string> theorem_ids;  // empty runs nothing
  std::size_t tree_max_order = 10;       // exhaustive free trees
  std::size_t spider_max_order = 24;
  std::size_t coverage_max_order = 24;
  std::vector<std::size_t> kary_ks{3, 4, 5, 6, 7, 8};
  long long arith_max = 1000000;
  std::uint64_t seed = 1;
  std::size_t random_count = 200;      // random instances per battery
  std::size_t random_tree_max_order = 20;
  std::size_t random_graph_max_order = 14;
  std::size_t spanning_exhaustive_order = 5;
  SolverConfig solver;
  RnaValueFn rna_fn;  // empty: exact solver
};

namespace detail {

inline std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t battery_seed(std::uint64_t seed, const std::string& id) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : id) h = (h ^ ch) * 1099511628211ULL;
  return splitmix(seed ^ h);
}

// Uniform integer in [lo, hi].
inline std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(uniform_below(rng, hi - lo + 1));
}

inline Graph relabel_randomly(const Graph& g, std::mt19937_64& rng, std::vector<Vertex>* perm_out = nullptr) {
  std::vector<Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), Vertex{0});
  for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[uniform_below(rng, i)]);
  if (perm_out) *perm_out = perm;
  return g.relabeled(perm);
}

// Batteries run as job lists so generation stays sequential and checking parallel.
template <class Job, class Fn>
CheckReport run_jobs(const std::string& id, const std::vector<Job>& jobs, Fn check) {
  CheckReport total;
  total.theorem_id = id;
  for (auto& r : parallel_map(jobs, check)) total.merge(std::move(r));
  total.tally_notes();
  return total;
}

inline std::vector<Graph> exhaustive_trees(std::size_t min_order, std::size_t max_order) {
  std::vector<Graph> out;
  for (std::size_t p = min_order; p <= max_order; ++p)
    for (auto& t : enumerate_free_trees(p)) out.push_back(std::move(t));
  return out;
}

inline std::vector<Graph> random_trees(std::mt19937_64& rng, std::size_t count, std::size_t min_order,
                                       std::size_t max_order) {
  std::vector<Graph> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_tree(pick(rng, min_order, max_order), rng));
  return out;
}

// Tree with an anchor of degree `sizes.size()` whose branches have the given sizes,
// each branch a random tree joined to the anchor at a random vertex.
inline Graph tree_with_branches(const std::vector<std::size_t>& sizes, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  Vertex next = 1;
  for (std::size_t s : sizes) {
    const Vertex base = next;
    if (s >= 2) {
      const Graph branch = random_tree(s, rng);
      for (const auto& e : branch.edges()) edges.push_back(Edge{e.u + base, e.v + base});
    }
    edges.push_back(Edge{0, base + static_cast<Vertex>(uniform_below(rng, s))});
    next += static_cast<Vertex>(s);
  }
  return Graph(next, std::move(edges));
}

// Random branch sizes for the delta bound: `parts` positive sizes summing to n - 1,
// with the largest optionally pinned.
inline std::vector<std::size_t> random_composition(std::mt19937_64& rng, std::size_t total, std::size_t parts,
                                                   std::size_t first = 0) {
  std::vector<std::size_t> sizes(parts, 1);
  std::size_t left = total - parts;
  if (first > 1) {
    sizes[0] = first;
    left -= first - 1;
  }
  while (left > 0) {
    std::size_t j = first > 1 ? pick(rng, 1, parts - 1) : pick(rng, 0, parts - 1);
    if (first > 1 && sizes[j] >= first) continue;
    ++sizes[j];
    --left;
  }
  return sizes;
}

inline std::vector<Graph> delta_bound_instances(std::mt19937_64& rng, std::size_t count) {
  std::vector<Graph> out;
  const std::vector<std::size_t> two(6, 2);
  out.push_back(tree_with_branches(two, rng));  // order 13, Delta 6, six branches of size 2
  out.push_back(spider(7, 5));
  out.push_back(perfect_kary_depth2(5));
  std::size_t attempts = 0;
  while (out.size() < count + 3 && attempts < 100 * count) {
    ++attempts;
    const std::size_t n = pick(rng, 6, 26);
    const std::size_t mode = attempts % 3;
    std::size_t delta;
    std::size_t first = 0;
    if (mode == 0) {
      delta = pick(rng, 2, n - 1);
    } else if (mode == 1) {
      delta = std::min(n - 1, (n + 1) / 2 + pick(rng, 0, 3));
    } else {
      // aims at condition (2): l = 0 and 3 <= p(B1) < cfloor(n)
      if (n < 14) continue;
      delta = (n + 1) / 2;
      const auto hi = static_cast<std::size_t>(cfloor(static_cast<long long>(n)));
      if (hi <= 3) continue;
      first = pick(rng, 3, hi - 1);
      if (first - 1 > n - 1 - delta) continue;
      if ((delta - 1) * (first - 1) < n - 1 - delta - (first - 1)) continue;
    }
    if (delta > n - 1) continue;
    Graph t = tree_with_branches(random_composition(rng, n - 1, delta, first), rng);
    if (!unique_max_degree_vertex(t)) continue;
    out.push_back(relabel_randomly(t, rng));
  }
  return out;
}

struct CycleInstance {
  Graph graph;
  std::vector<Vertex> cycle;
};

inline std::vector<CycleInstance> cycle_worked_instances() {
  return {
      {Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {2, 5}}), {0, 1, 2, 3}},
      {Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}}), {0, 1, 2, 3, 4, 5}},
      {Graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {0, 5}, {0, 6}}), {0, 1, 2, 3}},
  };
}

// Cycle on 0..m-1 with random trees hanging off cycle vertices and a few handles
// joining hanging trees, then randomly relabelled.
inline std::vector<CycleInstance> random_cycle_instances(std::mt19937_64& rng, std::size_t count, std::size_t max_order) {
  std::vector<CycleInstance> out;
  while (out.size() < count) {
    const std::size_t m = pick(rng, 3, 7);
    const std::size_t n = pick(rng, m, std::max(m, max_order));
    std::vector<Edge> edges;
    for (Vertex i = 0; i < m; ++i) edges.push_back(Edge::make(i, static_cast<Vertex>((i + 1) % m)));
    std::vector<Vertex> root(n);
    for (Vertex i = 0; i < m; ++i) root[i] = i;
    for (Vertex v = static_cast<Vertex>(m); v < n; ++v) {
      Vertex parent = static_cast<Vertex>(uniform_below(rng, v));
      root[v] = root[parent];
      edges.push_back(Edge{parent, v});
    }
    const std::size_t handles = n > m + 1 ? pick(rng, 0, 2) : 0;
    for (std::size_t h = 0; h < handles; ++h) {
      Vertex a = static_cast<Vertex>(pick(rng, m, n - 1)), b = static_cast<Vertex>(pick(rng, m, n - 1));
      if (a == b || root[a] == root[b]) continue;
      Edge e = Edge::make(a, b);
      if (std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
    }
    Graph g(n, std::move(edges));
    std::vector<Vertex> cycle(m);
    std::iota(cycle.begin(), cycle.end(), Vertex{0});
    try {
      validate_cycle_cut(g, cycle);
    } catch (const Error&) {
      continue;
    }
    std::vector<Vertex> perm;
    Graph relabelled = relabel_randomly(g, rng, &perm);
    for (auto& v : cycle) v = perm[v];
    out.push_back({std::move(relabelled), std::move(cycle)});
  }
  return out;
}

struct BridgePairInstance {
  Graph graph;
  Edge e1;
  Edge e2;
};

inline std::vector<BridgePairInstance> incident_worked_instances() {
  const Graph six(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}});
  const Graph seven(7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {3, 5}, {5, 6}});
  return {
      {six, Edge{0, 2}, Edge{0, 3}},
      {six, Edge{0, 1}, Edge{0, 2}},
      {seven, Edge{0, 1}, Edge{0, 2}},
  };
}

inline std::vector<BridgePairInstance> nonincident_worked_instances() {
  const Graph star_middle(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {5, 6}, {6, 7}});
  const Graph p8 = path(8);
  return {
      {star_middle, Edge{1, 2}, Edge{5, 6}},
      {p8, Edge{1, 2}, Edge{5, 6}},
      {p8, Edge{0, 1}, Edge{6, 7}},
  };
}

// Random tree plus 0-2 chords; a random qualifying bridge pair is chosen.
inline std::vector<BridgePairInstance> random_bridge_pairs(std::mt19937_64& rng, std::size_t count,
                                                           std::size_t max_order, bool incident) {
  std::vector<BridgePairInstance> out;
  while (out.size() < count) {
    const std::size_t n = pick(rng, 5, max_order);
    Graph g = random_connected_graph(n, pick(rng, 0, 2), rng);
    const auto bs = bridges(g);
    std::vector<std::pair<Edge, Edge>> pairs;
    for (std::size_t i = 0; i < bs.size(); ++i)
      for (std::size_t j = i + 1; j < bs.size(); ++j) {
        const Edge& a = bs[i];
        const Edge& b = bs[j];
        const bool shares = a.touches(b.u) || a.touches(b.v);
        if (shares != incident) continue;
        if (incident) {
          Vertex v = a.touches(b.u) ? b.u : b.v;
          if (g.degree(v) < 3) continue;
        }
        pairs.emplace_back(a, b);
      }
    if (pairs.empty()) continue;
    auto [a, b] = pairs[uniform_below(rng, pairs.size())];
    out.push_back({std::move(g), a, b});
  }
  return out;
}

}  // namespace detail

inline CheckReport run_battery(const std::string& id, const SuiteConfig& cfg) {
  const RnaValueFn rna_fn = cfg.rna_fn ? cfg.rna_fn : RnaValueFn(exact_rna);
  std::mt19937_64 rng(detail::battery_seed(cfg.seed, id));
  const auto start = std::chrono::steady_clock::now();
  auto trees_with_random = [&](std::size_t min_order) {
    auto trees = detail::exhaustive_trees(std::max<std::size_t>(min_order, 2), cfg.tree_max_order);
    if (cfg.random_tree_max_order >= std::max(min_order, cfg.tree_max_order + 1))
      for (auto& t : detail::random_trees(rng, cfg.random_count, std::max(min_order, cfg.tree_max_order + 1),
                                          cfg.random_tree_max_order))
        trees.push_back(std::move(t));
    return trees;
  };
  auto tree_battery = [&](std::size_t min_order, CheckReport (*check)(const Graph&, const RnaValueFn&)) {
    return detail::run_jobs(id, trees_with_random(min_order), [&](const Graph& t) { return check(t, rna_fn); });
  };

  CheckReport report;
  if (id == "tree-upper-bound") {
    report = tree_battery(2, check_tree_upper_bound);
  } else if (id == "connected-split-bound") {
    report = tree_battery(2, check_connected_split_bound);
  } else if (id == "rna1-iff") {
    report = tree_battery(2, check_rna1_iff);
  } else if (id == "star-extremal") {
    report = tree_battery(4, check_star_extremal);
  } else if (id == "small-tree") {
    std::vector<Graph> trees;
    for (auto& t : detail::exhaustive_trees(2, std::min<std::size_t>(7, cfg.tree_max_order)))
      if (!detail::is_star_tree(t)) trees.push_back(std::move(t));
    report = detail::run_jobs(id, trees, [&](const Graph& t) { return check_small_tree_corollary(t, rna_fn); });
  } else if (id == "pendant-monotone") {
    std::vector<Graph> trees;
    for (std::size_t p = 3; p <= cfg.tree_max_order; p += 2)
      for (auto& t : enumerate_free_trees(p)) trees.push_back(std::move(t));
    report = detail::run_jobs(id, trees, [&](const Graph& t) { return check_pendant_monotone(t, rna_fn); });
  } else if (id == "arith-lemma") {
    if (cfg.arith_max >= 1) report = check_arithmetic_lemma_range(1, cfg.arith_max);
  } else if (id == "delta-bound") {
    auto trees = detail::delta_bound_instances(rng, cfg.random_count * 3);
    for (auto& t : detail::exhaustive_trees(2, cfg.tree_max_order)) trees.push_back(std::move(t));
    report = detail::run_jobs(id, trees, [&](const Graph& t) { return check_delta_bound(t, rna_fn); });
  } else if (id == "kary-odd" || id == "kary-even") {
    std::vector<std::size_t> ks;
    for (std::size_t k : cfg.kary_ks)
      if (k > 2 && (k % 2 == 1) == (id == "kary-odd")) ks.push_back(k);
    report = detail::run_jobs(id, ks, [&](std::size_t k) {
      return id == "kary-odd" ? check_kary_odd(k, rna_fn) : check_kary_even(k, rna_fn);
    });
  } else if (id == "spider-formula") {
    std::vector<std::pair<std::size_t, std::size_t>> params;
    for (std::size_t p = 3; p <= cfg.spider_max_order; ++p)
      for (std::size_t l = 1; l <= p / 2; ++l) params.emplace_back(p - l, l);
    report = detail::run_jobs(id, params, [&](const auto& ml) { return check_spider_formula(ml.first, ml.second, rna_fn); });
  } else if (id == "partition-coverage") {
    std::vector<std::size_t> ns;
    for (std::size_t n = 2; n <= cfg.coverage_max_order; ++n) ns.push_back(n);
    report = detail::run_jobs(id, ns, [&](std::size_t n) { return check_partition_coverage(n, rna_fn); });
  } else if (id == "spanning-rna1") {
    std::vector<Graph> graphs{triangle_with_pendants(), path(6).with_edges(std::vector<Edge>{Edge{0, 2}}),
                              Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}})};
    for (std::size_t p = 2; p <= cfg.spanning_exhaustive_order; ++p)
      for_each_connected_graph(p, [&](const Graph& g) { graphs.push_back(g); });
    for (std::size_t i = 0; i < cfg.random_count; ++i) {
      const std::size_t n = detail::pick(rng, 4, 9);
      graphs.push_back(random_connected_graph(n, detail::pick(rng, 0, 4), rng));
    }
    report = detail::run_jobs(id, graphs, [&](const Graph& g) { return check_spanning_tree_rna1(g, rna_fn); });
  } else if (id == "rna2-sufficient") {
    auto trees = detail::exhaustive_trees(2, cfg.tree_max_order);
    for (auto& t : detail::random_trees(rng, cfg.random_count * 5, 5, 16)) trees.push_back(std::move(t));
    report = detail::run_jobs(id, trees, [&](const Graph& t) { return check_rna2_sufficient(t, rna_fn); });
  } else if (id == "rna2-cycle") {
    auto inst = detail::cycle_worked_instances();
    for (auto& c : detail::random_cycle_instances(rng, cfg.random_count, cfg.random_graph_max_order))
      inst.push_back(std::move(c));
    report = detail::run_jobs(id, inst, [&](const detail::CycleInstance& c) {
      return check_rna2_cycle(c.graph, c.cycle, cfg.solver);
    });
  } else if (id == "rna2-incident" || id == "rna2-nonincident") {
    const bool incident = id == "rna2-incident";
    auto inst = incident ? detail::incident_worked_instances() : detail::nonincident_worked_instances();
    for (auto& b : detail::random_bridge_pairs(rng, cfg.random_count, cfg.random_graph_max_order, incident))
      inst.push_back(std::move(b));
    report = detail::run_jobs(id, inst, [&](const detail::BridgePairInstance& b) {
      return incident ? check_rna2_incident_bridges(b.graph, b.e1, b.e2, cfg.solver)
                      : check_rna2_nonincident_bridges(b.graph, b.e1, b.e2, cfg.solver);
    });
  } else {
    throw Error("unknown theorem id '" + id + "'");
  }
  report.theorem_id = id;
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

inline std::vector<CheckReport> run_suite(const SuiteConfig& cfg) {
  for (const auto& id : cfg.theorem_ids)
    if (!is_theorem_id(id)) throw Error("unknown theorem id '" + id + "'");
  std::vector<CheckReport> out;
  for (const auto& id : cfg.theorem_ids) out.push_back(run_battery(id, cfg));
  return out;
}

inline bool all_passed(const std::vector<CheckReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.passed(); });
}

}  // namespace rnalab
