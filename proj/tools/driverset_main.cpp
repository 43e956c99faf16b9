// Command-line front end: graph analysis, driver-set enumeration, zero
// forcing, counterexample emission and the reference verification suite.
//
// Exit codes: 0 success, 1 capability limit hit, 2 bad arguments or input,
// 3 reference-suite failure.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "driverset/driverset.hpp"

namespace {

struct GlobalOptions {
  std::uint64_t seed = 0;
  int cap = 0;       // 0 = defaults
  double tol = driverset::kDefaultZeroTolerance;
  int jobs = 1;
};

driverset::EnumerationLimits limits_from(const GlobalOptions& global) {
  driverset::EnumerationLimits limits;
  if (global.cap > 0) {
    limits.max_vertices = global.cap;
    limits.max_subset_size = std::max(limits.max_subset_size, global.cap);
    limits.automorphism_cap = std::max(limits.automorphism_cap, global.cap);
  }
  return limits;
}

// Grammar: path:N | cycle:N | hypercube:K | file:PATH
driverset::Graph parse_graph_argument(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("graph spec must look like path:N, cycle:N, hypercube:K "
                                "or file:PATH (got '" + text + "')");
  const std::string kind = text.substr(0, colon);
  const std::string arg = text.substr(colon + 1);
  if (kind == "file") return driverset::read_edge_list_file(arg);
  int value = 0;
  try {
    std::size_t used = 0;
    value = std::stoi(arg, &used);
    if (used != arg.size()) throw std::invalid_argument(arg);
  } catch (const std::exception&) {
    throw std::invalid_argument("graph spec parameter must be an integer (got '" + arg + "')");
  }
  if (kind == "path") return driverset::path_graph(value);
  if (kind == "cycle") return driverset::cycle_graph(value);
  if (kind == "hypercube") return driverset::hypercube_graph(value);
  throw std::invalid_argument("unknown graph family '" + kind + "'");
}

std::vector<int> parse_vertex_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw std::invalid_argument("vertex list must be comma-separated integers (got '" +
                                  text + "')");
    }
  }
  if (out.empty()) throw std::invalid_argument("vertex list is empty");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int run_analyze(const std::string& graph_arg, const std::string& format,
                const GlobalOptions& global) {
  const driverset::Graph g = parse_graph_argument(graph_arg);
  driverset::AnalyzeOptions opts;
  opts.seed = global.seed;
  opts.limits = limits_from(global);
  opts.tolerance = global.tol;
  opts.jobs = global.jobs;
  const auto t0 = std::chrono::steady_clock::now();
  const driverset::DriverReport report = driverset::analyze(g, graph_arg, opts);
  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
  std::cerr << "analyze " << graph_arg << " finished in " << elapsed.count() << " ms\n";
  if (format == "table")
    std::cout << driverset::report_to_table(report);
  else
    std::cout << driverset::report_to_json(report).dump(2) << "\n";
  return 0;
}

int run_drivers(const std::string& graph_arg, bool with_classification,
                const GlobalOptions& global) {
  const driverset::Graph g = parse_graph_argument(graph_arg);
  const auto limits = limits_from(global);
  const auto e = driverset::enumerate_min_driver_sets(g, limits, global.jobs);
  nlohmann::json orbits = nlohmann::json::array();
  for (const auto& orbit : e.orbits)
    orbits.push_back(nlohmann::json{{"representative", orbit.representative},
                                    {"size", orbit.size},
                                    {"driver", orbit.is_driver}});
  nlohmann::json out{{"schema", 1},
                     {"descriptor", graph_arg},
                     {"D", e.d},
                     {"N_D", e.n_d},
                     {"sets", e.sets},
                     {"orbits", orbits}};
  if (with_classification) {
    std::vector<const driverset::DriverOrbit*> driver_orbits;
    for (const auto& orbit : e.orbits)
      if (orbit.is_driver) driver_orbits.push_back(&orbit);
    const auto results = driverset::parallel_map(
        global.jobs, static_cast<int>(driver_orbits.size()), [&](int i) {
          driverset::ClassifyOptions copts;
          copts.seed = driverset::mix_seed(global.seed, static_cast<std::uint64_t>(i));
          return driverset::classify(g, driver_orbits[static_cast<std::size_t>(i)]->representative,
                                     copts);
        });
    nlohmann::json classifications = nlohmann::json::array();
    for (std::size_t i = 0; i < driver_orbits.size(); ++i)
      classifications.push_back(
          nlohmann::json{{"representative", driver_orbits[i]->representative},
                         {"verdict", driverset::driver_type_name(results[i].verdict)},
                         {"rule", results[i].rule}});
    out["classifications"] = classifications;
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_zf(const std::string& graph_arg, const GlobalOptions& global) {
  const driverset::Graph g = parse_graph_argument(graph_arg);
  const auto zf = driverset::zero_forcing_number(g, limits_from(global), global.jobs);
  nlohmann::json out{
      {"schema", 1}, {"descriptor", graph_arg}, {"Z", zf.z}, {"sets", zf.sets}};
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_witness(const std::string& graph_arg, const std::string& set_arg,
                const GlobalOptions& global) {
  const driverset::Graph g = parse_graph_argument(graph_arg);
  const std::vector<int> s = parse_vertex_list(set_arg);
  driverset::ClassifyOptions copts;
  copts.seed = global.seed;
  const auto c = driverset::classify(g, s, copts);
  if (!c.witness) {
    std::cerr << "no counterexample for " << graph_arg << " with the given set: verdict is "
              << driverset::driver_type_name(c.verdict) << "\n";
    throw driverset::capability_error("no certified counterexample available");
  }
  nlohmann::json out = driverset::witness_to_json(*c.witness, *c.certificate);
  out["descriptor"] = graph_arg;
  out["set"] = s;
  out["verdict"] = driverset::driver_type_name(c.verdict);
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_verify() {
  const auto outcome = driverset::run_reference_checks(std::cout);
  return outcome.failed == 0 ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact driver-set, zero-forcing and strong-controllability analysis "
               "on undirected graphs"};
  app.require_subcommand(1);
  app.fallthrough(true);  // global flags may follow the subcommand

  GlobalOptions global;
  app.add_option("--seed", global.seed, "base seed for randomized searches")
      ->capture_default_str();
  app.add_option("--cap", global.cap, "override the enumeration vertex cap");
  app.add_option("--tol", global.tol, "numeric cross-check threshold")
      ->capture_default_str();
  app.add_option("--jobs", global.jobs, "worker count for orbit fan-out")
      ->capture_default_str();

  std::string graph_arg, format = "json", set_arg;
  bool with_classification = false;

  auto* analyze = app.add_subcommand("analyze", "full analysis report");
  analyze->add_option("--graph", graph_arg, "path:N | cycle:N | hypercube:K | file:PATH")
      ->required();
  analyze->add_option("--format", format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));

  auto* drivers = app.add_subcommand("drivers", "minimum driver-set enumeration");
  drivers->add_option("--graph", graph_arg, "graph spec")->required();
  drivers->add_flag("--classify", with_classification, "classify each driver orbit");

  auto* zf = app.add_subcommand("zf", "zero forcing number and minimum sets");
  zf->add_option("--graph", graph_arg, "graph spec")->required();

  auto* witness = app.add_subcommand("witness", "emit a certified counterexample");
  witness->add_option("--graph", graph_arg, "graph spec")->required();
  witness->add_option("--set", set_arg, "comma-separated vertex list")->required();

  app.add_subcommand("verify-paper", "run the built-in reference expectation suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand("analyze")) return run_analyze(graph_arg, format, global);
    if (app.got_subcommand("drivers")) return run_drivers(graph_arg, with_classification, global);
    if (app.got_subcommand("zf")) return run_zf(graph_arg, global);
    if (app.got_subcommand("witness")) return run_witness(graph_arg, set_arg, global);
    if (app.got_subcommand("verify-paper")) return run_verify();
  } catch (const driverset::capability_error& e) {
    std::cerr << "capability limit: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
