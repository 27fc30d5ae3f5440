// Command line front end: generators, exact searches, conjecture checks,
// and the built-in verification suite. Graph-consuming subcommands read
// graph6 lines from --in or standard input and emit one JSON report per
// line.
#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "bondcycle/bonds.hpp"
#include "bondcycle/conjecture.hpp"
#include "bondcycle/cycles.hpp"
#include "bondcycle/generators.hpp"
#include "bondcycle/graph_io.hpp"
#include "bondcycle/reports.hpp"
#include "bondcycle/verification.hpp"

namespace {

using namespace bondcycle;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitContradiction = 3;

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Applies `compute` to each graph6 line of `in`, one JSON object per line.
int for_each_graph_line(std::istream& in, const std::string& command, const json& parameters,
                        const std::function<json(const Graph&)>& compute) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto start = Clock::now();
    Graph g = [&] {
      try {
        return parse_graph6(line);
      } catch (const ParseError& e) {
        throw ParseError("line " + std::to_string(line_no) + ": " + e.what(), e.position());
      }
    }();
    json results = compute(g);
    std::cout << run_report(command, parameters, graph_descriptor(g), std::move(results),
                            ms_since(start))
              << "\n";
  }
  return kExitOk;
}

int run_on_input(const std::string& in_path, const std::string& command, const json& parameters,
                 const std::function<json(const Graph&)>& compute) {
  if (in_path.empty()) return for_each_graph_line(std::cin, command, parameters, compute);
  std::ifstream file(in_path);
  if (!file) {
    std::cerr << "bondcycle: cannot open " << in_path << "\n";
    return kExitUsage;
  }
  return for_each_graph_line(file, command, parameters, compute);
}

void write_labels_file(const std::string& path, const json& labels) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write label file " + path);
  out << labels.dump(2) << "\n";
}

std::string render_graph(const Graph& g, const std::string& format) {
  if (format == "g6") return write_graph6(g) + "\n";
  if (format == "edges") return write_edge_list(g);
  if (format == "dot") return write_dot(g);
  throw CLI::ValidationError("--format", "unknown format " + format);
}

json petersen_label_map(const PetersenGraph& pg) {
  json map;
  for (int i = 0; i < pg.n; ++i) {
    map["x" + std::to_string(i + 1)] = pg.labels.outer[static_cast<std::size_t>(i)];
    map["y" + std::to_string(i + 1)] = pg.labels.inner[static_cast<std::size_t>(i)];
  }
  return map;
}

json counterexample_label_map(const CounterexampleGraph& cx) {
  json map;
  for (int j = 0; j < 3; ++j)
    map["hub" + std::to_string(j)] = cx.labels.hubs[static_cast<std::size_t>(j)];
  for (int j = 0; j < 3; ++j) {
    json path = json::array();
    for (int v : cx.labels.side_paths[static_cast<std::size_t>(j)]) path.push_back(v);
    map["side" + std::to_string(j)] = path;
  }
  for (int j = 0; j < 4; ++j)
    map["y" + std::to_string(j)] = cx.labels.y_path[static_cast<std::size_t>(j)];
  return map;
}

json conjecture_line(const Graph& g, bool include_two_connected) {
  const bool three = vertex_connectivity_at_least(g, 3);
  const bool check =
      three || (include_two_connected && vertex_connectivity_at_least(g, 2));
  if (!check)
    return {{"skipped", true},
            {"three_connected", three},
            {"reason", "not 3-connected (pass --include-2-connected to widen)"}};
  return {{"report", to_json(check_conjecture(g))}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact largest-bond and longest-cycle computations on small graphs"};
  app.require_subcommand(1);

  // generator subcommands
  std::string format = "g6";
  std::string labels_path;
  int petersen_n = 0;
  int petersen_k = 0;
  auto* petersen_cmd = app.add_subcommand("petersen", "generate a generalized Petersen graph");
  petersen_cmd->add_option("n", petersen_n, "outer cycle length")->required();
  petersen_cmd->add_option("k", petersen_k, "inner rim step")->required();
  petersen_cmd->add_option("--format", format, "g6, edges, or dot")
      ->check(CLI::IsMember({"g6", "edges", "dot"}));
  petersen_cmd->add_option("--labels", labels_path, "write the label-to-vertex map as JSON");

  int subdiv = 0;
  auto* counter_cmd =
      app.add_subcommand("counterexample", "generate the two-connected family member");
  counter_cmd->add_option("--subdiv", subdiv, "subdivisions per triangle side (>= 5)")
      ->required();
  counter_cmd->add_option("--format", format, "g6, edges, or dot")
      ->check(CLI::IsMember({"g6", "edges", "dot"}));
  counter_cmd->add_option("--labels", labels_path, "write the label-to-vertex map as JSON");

  int bond_n = 0;
  int bond_k = 0;
  int bond_size = 0;
  auto* pbond_cmd =
      app.add_subcommand("petersen-bond", "construct a bond of P(n,k) of a given size");
  pbond_cmd->add_option("n", bond_n, "outer cycle length")->required();
  pbond_cmd->add_option("k", bond_k, "inner rim step")->required();
  pbond_cmd->add_option("--size", bond_size, "requested bond size in {3..n+2}")->required();

  // per-graph analysis subcommands
  std::string in_path;
  auto* largest_cmd = app.add_subcommand("largest-bond", "exact largest bond per input graph");
  largest_cmd->add_option("--in", in_path, "graph6 file (default: standard input)");
  auto* circ_cmd = app.add_subcommand("circumference", "exact longest cycle per input graph");
  circ_cmd->add_option("--in", in_path, "graph6 file (default: standard input)");
  auto* cospec_cmd = app.add_subcommand("co-spectrum", "all bond sizes per input graph");
  cospec_cmd->add_option("--in", in_path, "graph6 file (default: standard input)");
  auto* cyspec_cmd = app.add_subcommand("cycle-spectrum", "all cycle lengths per input graph");
  cyspec_cmd->add_option("--in", in_path, "graph6 file (default: standard input)");
  auto* dual_cmd =
      app.add_subcommand("dual-hamiltonian", "two-tree partition test per input graph");
  dual_cmd->add_option("--in", in_path, "graph6 file (default: standard input)");

  bool include_two = false;
  auto* conj_cmd = app.add_subcommand(
      "check-conjecture", "longest-cycle/largest-bond verdict per input graph");
  conj_cmd->add_option("--in", in_path, "graph6 file (default: standard input)");
  conj_cmd->add_flag("--include-2-connected", include_two,
                     "also check graphs that are only 2-connected");

  int sweep_n = 0;
  int threads = 1;
  bool only_three = false;
  std::string violations_path;
  auto* sweep_cmd =
      app.add_subcommand("sweep", "verify the conjecture over all labeled graphs on n vertices");
  sweep_cmd->add_option("--n", sweep_n, "vertex count (4..7)")->required();
  sweep_cmd->add_flag("--three-connected", only_three,
                      "enumerate only 3-connected graphs");
  sweep_cmd->add_flag("--include-2-connected", include_two,
                      "also check graphs that are only 2-connected");
  sweep_cmd->add_option("--threads", threads, "worker count (results are identical)");
  sweep_cmd->add_option("--violations", violations_path,
                        "write violating graphs as graph6 lines");

  auto* verify_cmd =
      app.add_subcommand("verify-paper", "run the full built-in verification suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (petersen_cmd->parsed()) {
      PetersenGraph pg = petersen(petersen_n, petersen_k);
      if (!labels_path.empty()) write_labels_file(labels_path, petersen_label_map(pg));
      std::cout << render_graph(pg.graph, format);
      return kExitOk;
    }

    if (counter_cmd->parsed()) {
      CounterexampleGraph cx = counterexample_two_connected(subdiv);
      if (!labels_path.empty()) write_labels_file(labels_path, counterexample_label_map(cx));
      std::cout << render_graph(cx.graph, format);
      return kExitOk;
    }

    if (pbond_cmd->parsed()) {
      const auto start = Clock::now();
      PetersenGraph pg = petersen(bond_n, bond_k);
      Bond bond = petersen_bond_of_size(pg, bond_size);
      const char* certificate =
          certified_largest_bond(pg.graph, bond) == BondCertificate::certified_optimal
              ? "certified-optimal"
              : "unknown";
      std::cout << run_report("petersen-bond",
                              {{"n", bond_n}, {"k", bond_k}, {"size", bond_size}},
                              graph_descriptor(pg.graph),
                              {{"bond", to_json(bond)}, {"certificate", certificate}},
                              ms_since(start))
                << "\n";
      return kExitOk;
    }

    if (largest_cmd->parsed()) {
      return run_on_input(in_path, "largest-bond", json::object(), [](const Graph& g) {
        Bond bond = largest_bond(g);
        return json{{"largest_bond_size", bond.size()},
                    {"upper_bound", bond_upper_bound(g)},
                    {"bond", to_json(bond)}};
      });
    }

    if (circ_cmd->parsed()) {
      return run_on_input(in_path, "circumference", json::object(), [](const Graph& g) {
        auto cycle = longest_cycle(g);
        if (!cycle) return json{{"circumference", 0}, {"acyclic", true}};
        return json{{"circumference", cycle->length()}, {"cycle", to_json(*cycle)}};
      });
    }

    if (cospec_cmd->parsed()) {
      return run_on_input(in_path, "co-spectrum", json::object(), [](const Graph& g) {
        return json{{"co_spectrum", to_json(co_spectrum(g))}};
      });
    }

    if (cyspec_cmd->parsed()) {
      return run_on_input(in_path, "cycle-spectrum", json::object(), [](const Graph& g) {
        return json{{"cycle_spectrum", to_json(cycle_spectrum(g))}};
      });
    }

    if (dual_cmd->parsed()) {
      return run_on_input(in_path, "dual-hamiltonian", json::object(), [](const Graph& g) {
        auto witness = dual_hamiltonian_witness(g);
        json out{{"dual_hamiltonian", witness.has_value()},
                 {"upper_bound", bond_upper_bound(g)}};
        if (witness) out["witness"] = to_json(*witness);
        return out;
      });
    }

    if (conj_cmd->parsed()) {
      return run_on_input(in_path, "check-conjecture",
                          {{"include_2_connected", include_two}}, [&](const Graph& g) {
                            return conjecture_line(g, include_two);
                          });
    }

    if (sweep_cmd->parsed()) {
      const auto start = Clock::now();
      GraphFilter filter;
      filter.three_connected = only_three;
      GraphEnumerator stream(sweep_n, filter);
      BatchOptions options;
      options.include_two_connected = include_two;
      options.threads = threads;
      SweepSummary summary = batch_verify([&] { return stream.next(); }, options);
      if (!violations_path.empty()) {
        std::ofstream sidecar(violations_path);
        if (!sidecar) throw std::runtime_error("cannot write " + violations_path);
        for (const std::string& g6 : summary.violation_graphs) sidecar << g6 << "\n";
      }
      std::cout << run_report("sweep",
                              {{"n", sweep_n},
                               {"three_connected", only_three},
                               {"include_2_connected", include_two},
                               {"threads", threads}},
                              nullptr, to_json(summary), ms_since(start))
                << "\n";
      return kExitOk;
    }

    if (verify_cmd->parsed()) {
      const auto start = Clock::now();
      const auto results = run_verification(&std::cout);
      json lines = json::array();
      bool all_passed = true;
      for (const auto& r : results) {
        all_passed = all_passed && r.passed;
        lines.push_back({{"id", r.id},
                         {"name", r.name},
                         {"passed", r.passed},
                         {"detail", r.detail},
                         {"wall_time_ms", r.wall_time_ms}});
      }
      std::cout << run_report("verify-paper", json::object(), nullptr,
                              {{"criteria", lines}, {"all_passed", all_passed}},
                              ms_since(start))
                << "\n";
      return all_passed ? kExitOk : kExitUsage;
    }
  } catch (const ParseError& e) {
    std::cerr << "bondcycle: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InfeasibleError& e) {
    std::cerr << "bondcycle: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const TheoremContradiction& e) {
    std::cerr << "bondcycle: " << e.what() << "\n";
    return kExitContradiction;
  } catch (const std::exception& e) {
    std::cerr << "bondcycle: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}
