#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "driverset/classification.hpp"
#include "driverset/controllability.hpp"
#include "driverset/zero_forcing.hpp"

namespace driverset {

struct ReferenceCheck {
  std::string description;
  std::function<bool(std::string& detail)> run;
};

namespace detail {

inline int euler_totient(int m) {
  int count = 0;
  for (int i = 1; i <= m; ++i)
    if (std::gcd(i, m) == 1) ++count;
  return count;
}

inline std::string sets_to_text(const std::vector<std::vector<int>>& sets) {
  std::ostringstream os;
  for (const auto& s : sets) {
    os << "{";
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    os << "} ";
  }
  return os.str();
}

}  // namespace detail

// Published reference values for the path, cycle and 3-cube analyses,
// embedded as data so the suite doubles as a regression ledger.  Each check
// recomputes the quantity from scratch and compares exactly.
inline std::vector<ReferenceCheck> reference_checks() {
  std::vector<ReferenceCheck> checks;

  // Minimum driver-set counts on cycles.
  const std::map<int, long long> cycle_counts = {{3, 3},   {4, 4},   {5, 10}, {6, 12},
                                                 {7, 21},  {8, 16},  {9, 27}, {10, 40},
                                                 {11, 55}, {12, 24}};
  for (auto [n_value, count_value] : cycle_counts) {
    checks.push_back({"cycle C_" + std::to_string(n_value) +
                          ": number of minimum driver sets = " + std::to_string(count_value),
                      [n = n_value, expected = count_value](std::string& detail) {
                        const auto e = enumerate_min_driver_sets(cycle_graph(n));
                        detail = "got D=" + std::to_string(e.d) +
                                 ", N_D=" + std::to_string(e.n_d);
                        return e.d == 2 && e.n_d == expected;
                      }});
  }

  // Totient law on paths, cross-checked against the gcd predicate.
  for (int n = 2; n <= 14; ++n) {
    checks.push_back({"path P_" + std::to_string(n) + ": N_D = phi(" + std::to_string(n + 1) +
                          ") and the gcd predicate matches the rank oracle",
                      [n](std::string& detail) {
                        const auto e = enumerate_min_driver_sets(path_graph(n));
                        const int phi = detail::euler_totient(n + 1);
                        detail = "got D=" + std::to_string(e.d) +
                                 ", N_D=" + std::to_string(e.n_d) +
                                 ", phi=" + std::to_string(phi);
                        if (e.d != 1 || e.n_d != phi) return false;
                        const Graph g = path_graph(n);
                        for (int i = 1; i <= n; ++i)
                          if (path_driver_predicate(n, i) != is_driver_set(g, {i})) {
                            detail = "predicate mismatch at vertex " + std::to_string(i);
                            return false;
                          }
                        return true;
                      }});
  }

  checks.push_back({"path P_5: minimum driver sets are {1} and {5}",
                    [](std::string& detail) {
                      const auto e = enumerate_min_driver_sets(path_graph(5));
                      detail = detail::sets_to_text(e.sets);
                      return e.sets == std::vector<std::vector<int>>{{1}, {5}};
                    }});

  checks.push_back({"cycle C_6: minimum driver sets are the 12 pairs at distance 1 or 2",
                    [](std::string& detail) {
                      const auto e = enumerate_min_driver_sets(cycle_graph(6));
                      const Graph g = cycle_graph(6);
                      std::vector<std::vector<int>> expected;
                      for (int i = 1; i <= 6; ++i)
                        for (int j = i + 1; j <= 6; ++j)
                          if (distance(g, i, j) <= 2) expected.push_back({i, j});
                      detail = detail::sets_to_text(e.sets);
                      return e.sets == expected;
                    }});

  checks.push_back(
      {"3-cube: D=3 with 32 minimum driver sets in orbits of sizes 24 and 8, Z=4",
       [](std::string& detail) {
         const Graph q3 = hypercube_graph(3);
         const auto e = enumerate_min_driver_sets(q3);
         std::vector<int> driver_orbit_sizes;
         for (const auto& orbit : e.orbits)
           if (orbit.is_driver) driver_orbit_sizes.push_back(orbit.size);
         std::sort(driver_orbit_sizes.begin(), driver_orbit_sizes.end());
         const auto zf = zero_forcing_number(q3);
         detail = "D=" + std::to_string(e.d) + ", N_D=" + std::to_string(e.n_d) +
                  ", Z=" + std::to_string(zf.z);
         return e.d == 3 && e.n_d == 32 && driver_orbit_sizes == std::vector<int>{8, 24} &&
                zf.z == 4;
       }});

  // Zero forcing on paths and cycles.
  for (int n = 2; n <= 12; ++n) {
    checks.push_back({"path P_" + std::to_string(n) + ": Z=1 with sets {1} and {" +
                          std::to_string(n) + "}",
                      [n](std::string& detail) {
                        const auto zf = zero_forcing_number(path_graph(n));
                        detail = "Z=" + std::to_string(zf.z) + " sets " +
                                 detail::sets_to_text(zf.sets);
                        return zf.z == 1 &&
                               zf.sets == std::vector<std::vector<int>>{{1}, {n}};
                      }});
  }
  for (int n = 3; n <= 12; ++n) {
    checks.push_back({"cycle C_" + std::to_string(n) + ": Z=2 with the " + std::to_string(n) +
                          " adjacent pairs",
                      [n](std::string& detail) {
                        const auto zf = zero_forcing_number(cycle_graph(n));
                        const Graph g = cycle_graph(n);
                        std::vector<std::vector<int>> expected;
                        for (int i = 1; i <= n; ++i)
                          for (int j = i + 1; j <= n; ++j)
                            if (distance(g, i, j) == 1) expected.push_back({i, j});
                        detail = "Z=" + std::to_string(zf.z);
                        return zf.z == 2 && zf.sets == expected;
                      }});
  }

  // Structural classifications.
  for (int n = 4; n <= 12; n += 2) {
    checks.push_back({"path P_" + std::to_string(n) +
                          ": {1} is type I and {2} is type II",
                      [n](std::string& detail) {
                        const Graph g = path_graph(n);
                        const auto c1 = classify(g, {1});
                        const auto c2 = classify(g, {2});
                        detail = driver_type_name(c1.verdict) + " / " +
                                 driver_type_name(c2.verdict);
                        return c1.verdict == DriverType::kTypeI &&
                               c2.verdict == DriverType::kTypeII;
                      }});
  }
  for (int n = 5; n <= 11; n += 2) {
    checks.push_back({"cycle C_" + std::to_string(n) + ": distance-2 pairs are type II",
                      [n](std::string& detail) {
                        const auto c = classify(cycle_graph(n), {1, 3});
                        detail = driver_type_name(c.verdict);
                        return c.verdict == DriverType::kTypeII;
                      }});
    checks.push_back({"cycle C_" + std::to_string(n) + ": adjacent pairs are type I",
                      [n](std::string& detail) {
                        const auto c = classify(cycle_graph(n), {1, 2});
                        detail = driver_type_name(c.verdict);
                        return c.verdict == DriverType::kTypeI;
                      }});
  }
  // Distance >= 3 driver orbits on cycles come with certified witnesses.
  for (int n = 7; n <= 12; ++n) {
    for (int d = 3; d <= n / 2; ++d) {
      if (!cycle_driver_predicate(n, {1, 1 + d})) continue;
      checks.push_back(
          {"cycle C_" + std::to_string(n) + ": distance-" + std::to_string(d) +
               " pairs are not strongly controllable over zero-diagonal weights",
           [n, d](std::string& detail) {
             const Graph g = cycle_graph(n);
             const auto c = classify(g, {1, 1 + d});
             detail = driver_type_name(c.verdict);
             if (c.verdict != DriverType::kNotStrongSym0 || !c.witness) return false;
             const ExactMatrix x = c.witness->to_matrix();
             return !pencil_controllable(x, {1, 1 + d}) &&
                    !kalman_controllable(x, input_matrix({1, 1 + d}, n));
           }});
    }
  }
  // Interior path singletons likewise.
  for (int n = 4; n <= 12; ++n) {
    for (int i = 3; i <= n - 2; ++i) {
      if (!path_driver_predicate(n, i)) continue;
      checks.push_back(
          {"path P_" + std::to_string(n) + ": interior driver {" + std::to_string(i) +
               "} is not strongly controllable over zero-diagonal weights",
           [n, i](std::string& detail) {
             const Graph g = path_graph(n);
             const auto c = classify(g, {i});
             detail = driver_type_name(c.verdict);
             if (c.verdict != DriverType::kNotStrongSym0 || !c.witness) return false;
             const ExactMatrix x = c.witness->to_matrix();
             return !pencil_controllable(x, {i}) &&
                    !kalman_controllable(x, input_matrix({i}, n));
           }});
    }
  }

  return checks;
}

struct ReferenceOutcome {
  int passed = 0;
  int failed = 0;
};

// Runs every check, printing one line per item.
inline ReferenceOutcome run_reference_checks(std::ostream& out) {
  ReferenceOutcome outcome;
  for (const auto& check : reference_checks()) {
    std::string detail;
    bool ok = false;
    try {
      ok = check.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (ok) {
      ++outcome.passed;
      out << "ok   " << check.description << "\n";
    } else {
      ++outcome.failed;
      out << "FAIL " << check.description << (detail.empty() ? "" : " [" + detail + "]")
          << "\n";
    }
  }
  out << (outcome.failed == 0 ? "all " + std::to_string(outcome.passed) + " checks passed"
                              : std::to_string(outcome.failed) + " of " +
                                    std::to_string(outcome.passed + outcome.failed) +
                                    " checks FAILED")
      << "\n";
  return outcome;
}

}  // namespace driverset
