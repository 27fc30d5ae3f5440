#include "bondcycle/reports.hpp"

#include "bondcycle/graph_io.hpp"

#ifndef BONDCYCLE_VERSION
#define BONDCYCLE_VERSION "0.0.0"
#endif

namespace bondcycle {

const char* version() { return BONDCYCLE_VERSION; }

namespace {

nlohmann::json edges_to_json(const EdgeSet& edges) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [u, v] : edges) out.push_back({u, v});
  return out;
}

}  // namespace

nlohmann::json to_json(const Bond& bond) {
  return {{"x", bond.x.to_vector()}, {"size", bond.size()}, {"cut", edges_to_json(bond.cut)}};
}

nlohmann::json to_json(const Cycle& cycle) {
  return {{"vertices", cycle.vertices}, {"length", cycle.length()}};
}

nlohmann::json to_json(const CoSpectrum& spectrum) {
  nlohmann::json witnesses = nlohmann::json::array();
  for (const auto& [size, bond] : spectrum.witnesses) witnesses.push_back(to_json(bond));
  return {{"sizes", spectrum.sizes()}, {"witnesses", witnesses}};
}

nlohmann::json to_json(const CycleSpectrum& spectrum) {
  nlohmann::json witnesses = nlohmann::json::array();
  for (const auto& [length, cycle] : spectrum.witnesses) witnesses.push_back(to_json(cycle));
  return {{"lengths", spectrum.lengths()}, {"witnesses", witnesses}};
}

nlohmann::json to_json(const ConjectureReport& report) {
  nlohmann::json out{
      {"n", report.n},
      {"m", report.m},
      {"three_connected", report.three_connected},
      {"circumference", report.circumference},
      {"largest_bond_size", report.largest_bond_size},
      {"num_longest_cycles", report.num_longest_cycles},
      {"num_largest_bonds", report.num_largest_bonds},
      {"all_pairs_meet", report.all_pairs_meet},
      {"min_shared_edges", report.min_shared_edges},
      {"all_shared_counts_even", report.all_shared_counts_even},
      {"min_bond_side_size", report.min_bond_side_size},
      {"hypotheses",
       {{"circumference_at_least_n_minus_3", report.hypothesis_long_cycle},
        {"largest_bond_at_least_m_minus_n_minus_1", report.hypothesis_large_bond}}},
      {"side_containment_consistent", report.side_containment_consistent},
  };
  if (report.disjoint_witness) {
    out["disjoint_witness"] = {{"cycle", to_json(report.disjoint_witness->first)},
                               {"bond", to_json(report.disjoint_witness->second)}};
  }
  return out;
}

nlohmann::json to_json(const SweepSummary& summary) {
  return {
      {"graphs_checked", summary.graphs_checked},
      {"three_connected_count", summary.three_connected_count},
      {"reports_computed", summary.reports_computed},
      {"conjecture_violations", summary.conjecture_violations},
      {"violation_graphs", summary.violation_graphs},
      {"hypothesis_coverage",
       {{"long_cycle_only", summary.hypothesis_long_cycle},
        {"large_bond_only", summary.hypothesis_large_bond},
        {"both", summary.hypothesis_both},
        {"neither", summary.hypothesis_neither}}},
      {"failures", summary.failures},
      {"parity_failures", summary.parity_failures},
      {"small_side_bonds", summary.small_side_bonds},
  };
}

nlohmann::json graph_descriptor(const Graph& g) {
  return {{"n", g.vertex_count()}, {"m", g.edge_count()}, {"graph6", write_graph6(g)}};
}

nlohmann::json run_report(const std::string& command, nlohmann::json parameters,
                          nlohmann::json graph, nlohmann::json results,
                          double wall_time_ms) {
  return {{"command", command},
          {"parameters", std::move(parameters)},
          {"graph", std::move(graph)},
          {"results", std::move(results)},
          {"wall_time_ms", wall_time_ms},
          {"version", version()}};
}

}  // namespace bondcycle
