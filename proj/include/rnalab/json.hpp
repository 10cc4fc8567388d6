#pragma once

#include <chrono>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rnalab/families.hpp"
#include "rnalab/parity.hpp"
#include "rnalab/solvers.hpp"
#include "rnalab/theorems.hpp"

namespace rnalab {

inline nlohmann::json to_json(const VertexSet& s) { return nlohmann::json(s.ids()); }

inline nlohmann::json to_json(const std::vector<Edge>& edges) {
  auto out = nlohmann::json::array();
  for (const auto& e : edges) out.push_back({e.u, e.v});
  return out;
}

// Object keyed by vertex id (as a string) mapping to the label.
inline nlohmann::json to_json(const ParitySignature& f) {
  nlohmann::json out = nlohmann::json::object();
  for (Vertex v = 0; v < f.order(); ++v) out[std::to_string(v)] = f.label(v);
  return out;
}

inline nlohmann::json to_json(const Graph& g, const Bipartition& b) {
  return {{"v1", to_json(b.v1)}, {"v2", to_json(b.v2)}, {"cut", cut_size(g, b)}};
}

inline nlohmann::json to_json(const Graph& g, const RnaCertificate& c) {
  return {{"value", c.value},
          {"method", std::string(to_string(c.method))},
          {"v1", to_json(c.witness.v1)},
          {"v2", to_json(c.witness.v2)},
          {"labels", to_json(c.witness_signature)},
          {"negative_edges", to_json(sign_edges(g, c.witness_signature).negative)}};
}

inline nlohmann::json to_json(const ConnectedSplit& s) {
  return {{"edge", {s.edge.u, s.edge.v}},
          {"small_side", to_json(s.small_side)},
          {"large_side", to_json(s.large_side)},
          {"imbalance", s.imbalance}};
}

inline nlohmann::json to_json(const BranchDecomposition& b) {
  auto branches = nlohmann::json::array();
  for (const auto& s : b.secondary_branches) branches.push_back(to_json(s));
  return {{"anchor", b.anchor}, {"degree", b.degree}, {"branch_sizes", b.sizes()}, {"branches", branches}};
}

inline nlohmann::json to_json(const Failure& f) {
  return {{"instance", f.instance},
          {"description", f.description},
          {"expected", f.expected},
          {"observed", f.observed}};
}

// Elapsed time is left out unless asked for, so reports stay byte-stable.
inline nlohmann::json to_json(const CheckReport& r, bool with_timing = false) {
  auto failures = nlohmann::json::array();
  for (const auto& f : r.failures) failures.push_back(to_json(f));
  nlohmann::json out = {{"theorem_id", r.theorem_id},
                        {"passed", r.passed()},
                        {"instances_tested", r.instances_tested},
                        {"skipped", r.skipped},
                        {"failures", failures},
                        {"notes", r.notes}};
  if (with_timing)
    out["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(r.elapsed).count();
  return out;
}

}  // namespace rnalab
