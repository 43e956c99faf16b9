// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// criterion fails.  Criterion 9 drives the installed CLI binary, whose path
// arrives via --cli.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <sys/wait.h>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "driverset/driverset.hpp"

namespace {

using namespace driverset;
using Clock = std::chrono::steady_clock;

struct CriterionResult {
  bool pass = false;
  std::string detail;
};

int euler_totient(int m) {
  int count = 0;
  for (int i = 1; i <= m; ++i)
    if (std::gcd(i, m) == 1) ++count;
  return count;
}

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> comb(static_cast<std::size_t>(k));
  std::iota(comb.begin(), comb.end(), 1);
  while (true) {
    out.push_back(comb);
    int pos = k - 1;
    while (pos >= 0 && comb[static_cast<std::size_t>(pos)] == n - k + pos + 1) --pos;
    if (pos < 0) break;
    ++comb[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < k; ++i)
      comb[static_cast<std::size_t>(i)] = comb[static_cast<std::size_t>(i - 1)] + 1;
  }
  return out;
}

Graph random_graph(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int n = 3 + static_cast<int>(rng() % 6);  // 3..8
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (rng() & 1) edges.push_back({i, j});
  return custom_graph(n, std::move(edges));
}

// 1. Cycle driver-set counts for n = 3..12, under 60 seconds total.
CriterionResult criterion_cycle_table() {
  const std::map<int, long long> expected = {{3, 3},   {4, 4},   {5, 10}, {6, 12},
                                             {7, 21},  {8, 16},  {9, 27}, {10, 40},
                                             {11, 55}, {12, 24}};
  const auto t0 = Clock::now();
  for (auto [n, count] : expected) {
    const auto e = enumerate_min_driver_sets(cycle_graph(n));
    if (e.n_d != count)
      return {false, "C_" + std::to_string(n) + ": got " + std::to_string(e.n_d) +
                         ", expected " + std::to_string(count)};
  }
  const auto seconds =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count() / 1000.0;
  if (seconds >= 60.0) return {false, "took " + std::to_string(seconds) + " s (budget 60 s)"};
  std::ostringstream detail;
  detail << "all ten counts match in " << seconds << " s";
  return {true, detail.str()};
}

// 2. N_D(P_n) = phi(n+1) for n = 2..14, enumeration vs gcd predicate.
CriterionResult criterion_path_totient() {
  for (int n = 2; n <= 14; ++n) {
    const auto e = enumerate_min_driver_sets(path_graph(n));
    if (e.d != 1 || e.n_d != euler_totient(n + 1))
      return {false, "P_" + std::to_string(n) + ": got N_D=" + std::to_string(e.n_d) +
                         ", expected phi(" + std::to_string(n + 1) + ")=" +
                         std::to_string(euler_totient(n + 1))};
    const Graph g = path_graph(n);
    for (int i = 1; i <= n; ++i)
      if (path_driver_predicate(n, i) != is_driver_set(g, {i}))
        return {false, "P_" + std::to_string(n) + ": predicate disagrees at vertex " +
                           std::to_string(i)};
  }
  return {true, "13 path sizes verified"};
}

// 3. Worked examples: P_5, C_6, Q_3, exact.
CriterionResult criterion_worked_examples() {
  const auto p5 = enumerate_min_driver_sets(path_graph(5));
  if (p5.sets != std::vector<std::vector<int>>{{1}, {5}})
    return {false, "P_5 minimum driver sets are wrong"};

  const auto c6 = enumerate_min_driver_sets(cycle_graph(6));
  const Graph g6 = cycle_graph(6);
  std::vector<std::vector<int>> expected;
  for (int i = 1; i <= 6; ++i)
    for (int j = i + 1; j <= 6; ++j)
      if (distance(g6, i, j) <= 2) expected.push_back({i, j});
  if (c6.sets != expected) return {false, "C_6 minimum driver sets are wrong"};

  const Graph q3 = hypercube_graph(3);
  const auto e3 = enumerate_min_driver_sets(q3);
  std::vector<int> driver_orbit_sizes;
  for (const auto& orbit : e3.orbits)
    if (orbit.is_driver) driver_orbit_sizes.push_back(orbit.size);
  std::sort(driver_orbit_sizes.begin(), driver_orbit_sizes.end());
  if (e3.d != 3 || e3.n_d != 32 || driver_orbit_sizes != std::vector<int>{8, 24})
    return {false, "Q_3 enumeration is wrong"};
  if (zero_forcing_number(q3).z != 4) return {false, "Z(Q_3) != 4"};
  return {true, "P_5, C_6 and Q_3 reproduced exactly"};
}

// 4. Zero forcing sets of paths and cycles up to n = 12.
CriterionResult criterion_zero_forcing() {
  for (int n = 2; n <= 12; ++n) {
    const auto r = zero_forcing_number(path_graph(n));
    if (r.z != 1 || r.sets != std::vector<std::vector<int>>{{1}, {n}})
      return {false, "Z(P_" + std::to_string(n) + ") mismatch"};
  }
  for (int n = 3; n <= 12; ++n) {
    const auto r = zero_forcing_number(cycle_graph(n));
    const Graph g = cycle_graph(n);
    std::vector<std::vector<int>> expected;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if (distance(g, i, j) == 1) expected.push_back({i, j});
    if (r.z != 2 || r.sets != expected)
      return {false, "Z(C_" + std::to_string(n) + ") mismatch"};
  }
  return {true, "paths and cycles up to n=12"};
}

// 5. Three-oracle agreement on 500 seeded random graphs.
CriterionResult criterion_three_oracles() {
  long long checked = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const Graph g = random_graph(12345 + seed);
    const ExactMatrix a = adjacency(g);
    const int n = g.vertex_count();
    for (int k = 1; k <= std::min(3, n); ++k)
      for (const auto& s : subsets_of_size(n, k)) {
        const bool kalman = kalman_controllable(a, input_matrix(s, n));
        const bool pencil = pencil_controllable(a, s);
        const bool numeric = pbh_eigenspace_check(g, s, 1e-7);
        ++checked;
        if (kalman != pencil)
          return {false, "kalman/pencil disagree on seed " + std::to_string(seed)};
        if (kalman != numeric)
          return {false, "numeric check disagrees on seed " + std::to_string(seed)};
      }
  }
  return {true, std::to_string(checked) + " subset verdicts, zero disagreements"};
}

// 6. Determinant identity on 200 seeded zero-diagonal path systems.
CriterionResult criterion_det_identity() {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int n = 1 + static_cast<int>(seed % 10);
    const auto ws = sample_weighted(path_graph(n), WeightMode::kSym0, 777000 + seed);
    if (sym0_path_det_formula(ws) != det_exact(ws.to_matrix()))
      return {false, "formula mismatch at seed " + std::to_string(seed)};
  }
  return {true, "200 systems, exact agreement"};
}

// 7. Classification suite with certified witnesses.
CriterionResult criterion_classification() {
  for (int n = 4; n <= 12; n += 2) {
    const Graph g = path_graph(n);
    if (classify(g, {2}).verdict != DriverType::kTypeII)
      return {false, "P_" + std::to_string(n) + " {2} is not type II"};
    if (classify(g, {1}).verdict != DriverType::kTypeI)
      return {false, "P_" + std::to_string(n) + " {1} is not type I"};
  }
  for (int n = 5; n <= 11; n += 2) {
    if (classify(cycle_graph(n), {1, 3}).verdict != DriverType::kTypeII)
      return {false, "C_" + std::to_string(n) + " {1,3} is not type II"};
  }
  int witnesses = 0;
  for (int n = 3; n <= 12; ++n) {
    const Graph g = cycle_graph(n);
    for (int d = 3; d <= n / 2; ++d) {
      if (!cycle_driver_predicate(n, {1, 1 + d})) continue;
      const auto c = classify(g, {1, 1 + d});
      if (c.verdict != DriverType::kNotStrongSym0 || !c.witness)
        return {false, "C_" + std::to_string(n) + " distance " + std::to_string(d) +
                           " lacks a certified witness"};
      const ExactMatrix x = c.witness->to_matrix();
      if (pencil_controllable(x, {1, 1 + d}))
        return {false, "C_" + std::to_string(n) + " witness passes the pencil test"};
      if (kalman_controllable(x, input_matrix({1, 1 + d}, n)))
        return {false, "C_" + std::to_string(n) + " witness passes the rank oracle"};
      ++witnesses;
    }
  }
  for (int n = 4; n <= 12; n += 2) {
    const Graph g = path_graph(n);
    for (int i = 3; i <= n - 2; ++i) {
      if (!path_driver_predicate(n, i)) continue;
      const auto c = classify(g, {i});
      if (c.verdict != DriverType::kNotStrongSym0 || !c.witness)
        return {false, "P_" + std::to_string(n) + " {" + std::to_string(i) +
                           "} lacks a certified witness"};
      const ExactMatrix x = c.witness->to_matrix();
      if (pencil_controllable(x, {i}))
        return {false, "P_" + std::to_string(n) + " witness passes the pencil test"};
      if (kalman_controllable(x, input_matrix({i}, n)))
        return {false, "P_" + std::to_string(n) + " witness passes the rank oracle"};
      ++witnesses;
    }
  }
  return {true, std::to_string(witnesses) + " witnesses verified by both exact oracles"};
}

// 8. Automorphism invariance and the multiplicity/driver/zero-forcing
// bound chain on every analyzed graph.
CriterionResult criterion_invariance_and_bounds() {
  std::vector<Graph> graphs;
  for (int n = 2; n <= 10; ++n) graphs.push_back(path_graph(n));
  for (int n = 3; n <= 10; ++n) graphs.push_back(cycle_graph(n));
  graphs.push_back(hypercube_graph(3));
  for (std::uint64_t seed = 50; seed < 56; ++seed) graphs.push_back(random_graph(seed));

  for (const Graph& g : graphs) {
    const int n = g.vertex_count();
    std::vector<Permutation> group;
    try {
      group = automorphism_group(g);
    } catch (const capability_error&) {
      group = {Permutation::identity(n)};
    }
    const auto e = enumerate_min_driver_sets(g);
    const auto zf = zero_forcing_number(g);
    if (!(max_multiplicity(g) <= e.d && e.d <= zf.z))
      return {false, "bound chain fails on an analyzed graph with n=" + std::to_string(n)};
    for (const auto& s : e.sets)
      for (const auto& p : group)
        if (!is_driver_set(g, p.apply(s)))
          return {false, "driver verdict not invariant on n=" + std::to_string(n)};
    for (const auto& s : zf.sets)
      for (const auto& p : group)
        if (!is_zero_forcing_set(g, p.apply(s)))
          return {false, "zero-forcing verdict not invariant on n=" + std::to_string(n)};
  }
  return {true, std::to_string(graphs.size()) + " graphs checked"};
}

// 9. Byte-identical analyze output across --jobs 1 and --jobs 8.
std::string capture(const std::string& command, int* exit_code) {
  std::string output;
  FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
  if (!pipe) {
    *exit_code = -1;
    return output;
  }
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    output.append(buffer.data(), got);
  const int status = pclose(pipe);
  *exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return output;
}

CriterionResult criterion_cli_determinism(const std::string& cli) {
  if (cli.empty()) return {false, "pass --cli <path-to-binary>"};
  for (const std::string graph : {"path:12", "cycle:12", "hypercube:3"}) {
    int code1 = 0, code8 = 0;
    const std::string serial = capture(cli + " --jobs 1 analyze --graph " + graph, &code1);
    const std::string parallel = capture(cli + " --jobs 8 analyze --graph " + graph, &code8);
    if (code1 != 0 || code8 != 0)
      return {false, graph + ": analyze exited with " + std::to_string(code1) + "/" +
                         std::to_string(code8)};
    if (serial != parallel) return {false, graph + ": outputs differ between job counts"};
    if (serial.empty()) return {false, graph + ": no output captured"};
  }
  return {true, "three graphs, byte-identical output"};
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli;
  for (int i = 1; i < argc; ++i) {
    if (std::string(argv[i]) == "--cli" && i + 1 < argc) cli = argv[i + 1];
  }

  struct Criterion {
    std::string name;
    std::function<CriterionResult()> run;
  };
  const std::vector<Criterion> criteria = {
      {"cycle driver-set table (n=3..12)", criterion_cycle_table},
      {"path totient law (n=2..14)", criterion_path_totient},
      {"worked examples P_5, C_6, Q_3", criterion_worked_examples},
      {"zero forcing on paths and cycles (n<=12)", criterion_zero_forcing},
      {"three-oracle agreement on 500 random graphs", criterion_three_oracles},
      {"zero-diagonal path determinant identity (200 systems)", criterion_det_identity},
      {"classification suite with certified witnesses", criterion_classification},
      {"automorphism invariance and bound chain", criterion_invariance_and_bounds},
      {"byte-identical analyze output across job counts",
       [&cli] { return criterion_cli_determinism(cli); }},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = Clock::now();
    CriterionResult result;
    try {
      result = criteria[i].run();
    } catch (const std::exception& e) {
      result = {false, std::string("exception: ") + e.what()};
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
    std::cout << (result.pass ? "[PASS] " : "[FAIL] ") << (i + 1) << ". " << criteria[i].name
              << " — " << result.detail << " (" << ms << " ms)" << std::endl;
    if (!result.pass) ++failures;
  }
  if (failures > 0) std::cout << failures << " criteria FAILED" << std::endl;
  return failures == 0 ? 0 : 1;
}
