#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "bondcycle/bonds.hpp"
#include "bondcycle/conjecture.hpp"
#include "bondcycle/cycles.hpp"
#include "bondcycle/graph.hpp"

namespace bondcycle {

/// Library version reported in every run report.
const char* version();

nlohmann::json to_json(const Bond& bond);
nlohmann::json to_json(const Cycle& cycle);
nlohmann::json to_json(const CoSpectrum& spectrum);
nlohmann::json to_json(const CycleSpectrum& spectrum);
nlohmann::json to_json(const ConjectureReport& report);
nlohmann::json to_json(const SweepSummary& summary);

/// {"n": ..., "m": ..., "graph6": ...}
nlohmann::json graph_descriptor(const Graph& g);

/// Top-level report around one command invocation. `graph` may be null
/// for commands that do not consume a graph.
nlohmann::json run_report(const std::string& command, nlohmann::json parameters,
                          nlohmann::json graph, nlohmann::json results,
                          double wall_time_ms);

}  // namespace bondcycle
