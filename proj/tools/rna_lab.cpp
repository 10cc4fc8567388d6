#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "rnalab/families.hpp"
#include "rnalab/io.hpp"
#include "rnalab/json.hpp"
#include "rnalab/parallel.hpp"
#include "rnalab/solvers.hpp"
#include "rnalab/suite.hpp"
#include "rnalab/tree_codes.hpp"

using namespace rnalab;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "1.0.0";

enum Exit { kOk = 0, kCounterexample = 1, kUsage = 2 };

struct UsageError : Error {
  using Error::Error;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open input '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

void emit(const std::string& text, const std::string& output) {
  if (output.empty() || output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(output, std::ios::binary);
  if (!out) throw UsageError("cannot open output '" + output + "'");
  out << text;
}

std::string join(const VertexSet& s) {
  std::string out;
  for (Vertex v : s) out += (out.empty() ? "" : " ") + std::to_string(v);
  return out;
}

struct ComputeOptions {
  std::string input;
  std::string format = "json";
  std::string method = "auto";
  bool all_optima = false;
  SolverConfig solver;
  std::string output;
};

struct TreeData {
  std::string code;
  ConnectedSplitResult split;
  std::size_t delta = 0;
  std::optional<BranchDecomposition> branches;
};

int cmd_compute(const ComputeOptions& opt) {
  Graph g = parse_graph(read_input(opt.input));
  std::optional<RnaCertificate> cert;
  std::size_t value = 0;
  std::string method_name;
  if (opt.method == "auto") {
    cert = rna(g, opt.solver);
  } else if (opt.method == "brute") {
    cert = rna_bruteforce(g, opt.solver);
  } else if (opt.method == "tree-dp") {
    cert = rna_tree_dp(g);
  } else {
    value = rna_factorial_oracle(g, opt.solver);
    method_name = std::string(to_string(Method::factorial_oracle));
  }
  if (cert) {
    value = cert->value;
    method_name = std::string(to_string(cert->method));
  }

  std::vector<Bipartition> optima;
  if (opt.all_optima) {
    if (opt.method == "tree-dp") throw UsageError("--all-optima needs the brute-force solver");
    optima = all_optimal_bisections(g, opt.solver);
  }

  std::optional<TreeData> tree;
  if (is_tree(g) && g.order() >= 2) {
    TreeData d;
    d.code = canonical_tree_code(g);
    d.split = connected_split_min(g);
    d.delta = g.max_degree();
    if (auto anchor = unique_max_degree_vertex(g)) d.branches = branch_decomposition(g, *anchor);
    tree = std::move(d);
  }

  std::ostringstream out;
  if (opt.format == "json") {
    json j = {{"order", g.order()}, {"size", g.size()}, {"graph6", write_graph6(g)}, {"is_tree", tree.has_value()}};
    if (cert) {
      j["certificate"] = to_json(g, *cert);
    } else {
      j["certificate"] = {{"value", value}, {"method", method_name}};
    }
    if (tree) {
      j["tree"] = {{"canonical_code", tree->code},
                   {"connected_split", tree->split.value},
                   {"split", to_json(tree->split.witness)},
                   {"delta", tree->delta},
                   {"branch_decomposition", tree->branches ? to_json(*tree->branches) : json(nullptr)}};
    }
    if (opt.all_optima) {
      json list = json::array();
      for (const auto& b : optima) list.push_back(to_json(g, b));
      j["all_optima"] = list;
    }
    out << j.dump(2) << "\n";
  } else if (opt.format == "text") {
    out << "order " << g.order() << ", size " << g.size() << "\n";
    out << "rna " << value << " (" << method_name << ")\n";
    if (cert) {
      out << "V1: " << join(cert->witness.v1) << "\n";
      out << "V2: " << join(cert->witness.v2) << "\n";
      out << "labels:";
      for (Vertex v = 0; v < g.order(); ++v) out << " " << v << "=" << cert->witness_signature.label(v);
      out << "\nnegative edges:";
      for (const auto& e : sign_edges(g, cert->witness_signature).negative) out << " " << to_string(e);
      out << "\n";
    }
    if (tree) {
      out << "C(T) " << tree->split.value << " at edge " << to_string(tree->split.witness.edge) << "\n";
      out << "max degree " << tree->delta << "\n";
      if (tree->branches) {
        out << "branch sizes at " << tree->branches->anchor << ":";
        for (auto s : tree->branches->sizes()) out << " " << s;
        out << "\n";
      }
    }
    for (const auto& b : optima) out << "optimum: " << join(b.v1) << " | " << join(b.v2) << "\n";
  } else {
    out << "order,size,rna,method,C,delta\n";
    out << g.order() << "," << g.size() << "," << value << "," << method_name << ",";
    if (tree) out << tree->split.value << "," << tree->delta;
    else out << ",";
    out << "\n";
  }
  emit(out.str(), opt.output);
  return kOk;
}

struct GenerateOptions {
  std::string family;
  std::size_t n = 0, order = 0, m = 0, l = 0, k = 0;
  std::uint64_t seed = 1;
  std::size_t count = 1;
  std::string format = "edge-list";
  std::string output;
};

int cmd_generate(const GenerateOptions& opt) {
  auto need = [](std::size_t v, const char* flag) {
    if (v == 0) throw UsageError(std::string("missing ") + flag);
    return v;
  };
  std::vector<Graph> graphs;
  if (opt.family == "star") {
    graphs.push_back(star(need(opt.n, "--n")));
  } else if (opt.family == "path") {
    graphs.push_back(path(need(opt.order, "--order")));
  } else if (opt.family == "spider") {
    graphs.push_back(spider(need(opt.m, "--m"), need(opt.l, "--l")));
  } else if (opt.family == "kary") {
    graphs.push_back(perfect_kary_depth2(need(opt.k, "--k")));
  } else {
    std::mt19937_64 rng(opt.seed);
    for (std::size_t i = 0; i < opt.count; ++i) graphs.push_back(random_tree(need(opt.order, "--order"), rng));
  }
  std::string out;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (opt.format == "graph6") {
      out += write_graph6(graphs[i]) + "\n";
      continue;
    }
    if (graphs.size() > 1) out += "# tree " + std::to_string(i + 1) + "\n";
    out += write_edge_list(graphs[i]);
  }
  emit(out, opt.output);
  return kOk;
}

struct VerifyOptions {
  std::vector<std::string> ids;
  std::optional<std::size_t> max_order;
  std::uint64_t seed = 1;
  std::optional<std::size_t> count;
  bool timing = false;
  std::string output;
};

int cmd_verify(const VerifyOptions& opt) {
  SuiteConfig cfg;
  for (const auto& id : opt.ids) {
    if (id == "all") {
      for (const auto& t : theorem_ids()) cfg.theorem_ids.push_back(t);
    } else if (is_theorem_id(id)) {
      cfg.theorem_ids.push_back(id);
    } else {
      throw UsageError("unknown theorem id '" + id + "'");
    }
  }
  if (opt.max_order) {
    if (*opt.max_order > 24)
      throw UsageError("--max-order must be at most 24");
    cfg.tree_max_order = std::min(*opt.max_order, kDefaultEnumerationCap);
    cfg.spider_max_order = *opt.max_order;
    cfg.coverage_max_order = *opt.max_order;
  }
  cfg.seed = opt.seed;
  if (opt.count) cfg.random_count = *opt.count;

  const auto reports = run_suite(cfg);
  json list = json::array();
  for (const auto& r : reports) list.push_back(to_json(r, opt.timing));
  json config = {{"tree_max_order", cfg.tree_max_order},
                 {"spider_max_order", cfg.spider_max_order},
                 {"coverage_max_order", cfg.coverage_max_order},
                 {"seed", cfg.seed},
                 {"random_count", cfg.random_count}};
  const bool ok = all_passed(reports);
  json j = {{"version", kVersion}, {"passed", ok}, {"config", config}, {"reports", list}};
  emit(j.dump(2) + "\n", opt.output);
  return ok ? kOk : kCounterexample;
}

struct SweepOptions {
  std::size_t max_order = 10;
  std::string output;
};

struct SweepRow {
  std::size_t order;
  std::string code;
  std::size_t rna, c, delta;
};

int cmd_sweep(const SweepOptions& opt) {
  if (opt.max_order < 2 || opt.max_order > kDefaultEnumerationCap)
    throw UsageError("--max-order must lie in 2.." + std::to_string(kDefaultEnumerationCap));
  std::vector<std::pair<std::size_t, Graph>> trees;
  for (std::size_t p = 2; p <= opt.max_order; ++p)
    for (auto& t : enumerate_free_trees(p)) trees.emplace_back(p, std::move(t));
  const auto rows = parallel_map(trees, [](const std::pair<std::size_t, Graph>& item) {
    const Graph& t = item.second;
    return SweepRow{item.first, canonical_tree_code(t), rna(t).value, connected_split_min(t).value, t.max_degree()};
  });
  std::ostringstream out;
  out << "# rna-lab sweep v1 (" << kVersion << ")\n";
  out << "order,code,rna,C,delta,class\n";
  std::map<std::size_t, std::map<std::size_t, std::size_t>> histogram;
  for (const auto& r : rows) {
    out << r.order << "," << r.code << "," << r.rna << "," << r.c << "," << r.delta << ",R" << r.rna << "\n";
    ++histogram[r.order][r.rna];
  }
  for (const auto& [order, classes] : histogram) {
    std::size_t total = 0;
    out << "# histogram order=" << order;
    for (const auto& [cls, count] : classes) {
      out << " R" << cls << "=" << count;
      total += count;
    }
    out << " total=" << total << "\n";
  }
  emit(out.str(), opt.output);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parity-signature rna number toolkit"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  ComputeOptions compute;
  auto* c = app.add_subcommand("compute", "rna number and certificate of one graph");
  c->add_option("--input", compute.input, "edge-list or graph6 file, - for stdin")->required();
  c->add_option("--format", compute.format)->check(CLI::IsMember({"json", "text", "csv"}));
  c->add_option("--method", compute.method)->check(CLI::IsMember({"auto", "brute", "tree-dp", "oracle"}));
  c->add_flag("--all-optima", compute.all_optima, "list every optimal bipartition (brute-force scale only)");
  c->add_option("--brute-cap", compute.solver.brute_cap)->check(CLI::PositiveNumber);
  c->add_option("--oracle-cap", compute.solver.oracle_cap)->check(CLI::PositiveNumber);
  c->add_option("--output", compute.output);

  GenerateOptions generate;
  auto* g = app.add_subcommand("generate", "emit family members as edge lists");
  g->add_option("family", generate.family)->required()->check(CLI::IsMember({"star", "path", "spider", "kary", "random-tree"}));
  g->add_option("--n", generate.n, "star leaves");
  g->add_option("--order", generate.order, "path or random tree order");
  g->add_option("--m", generate.m, "spider legs");
  g->add_option("--l", generate.l, "spider long-leg length");
  g->add_option("--k", generate.k, "perfect k-ary arity");
  g->add_option("--seed", generate.seed);
  g->add_option("--count", generate.count)->check(CLI::PositiveNumber);
  g->add_option("--format", generate.format)->check(CLI::IsMember({"edge-list", "graph6"}));
  g->add_option("--output", generate.output);

  VerifyOptions verify;
  auto* v = app.add_subcommand("verify", "run theorem checkers");
  v->add_option("ids", verify.ids, "theorem ids or 'all'")->required();
  v->add_option("--max-order", verify.max_order)->check(CLI::PositiveNumber);
  v->add_option("--seed", verify.seed);
  v->add_option("--count", verify.count, "random instances per battery");
  v->add_flag("--timing", verify.timing, "include elapsed times");
  v->add_option("--output", verify.output);

  SweepOptions sweep;
  auto* s = app.add_subcommand("sweep", "rna of every free tree up to an order, as CSV");
  s->add_option("--max-order", sweep.max_order);
  s->add_option("--output", sweep.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*c) return cmd_compute(compute);
    if (*g) return cmd_generate(generate);
    if (*v) return cmd_verify(verify);
    return cmd_sweep(sweep);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kUsage;
}
