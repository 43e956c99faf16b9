#pragma once

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "driverset/classification.hpp"
#include "driverset/controllability.hpp"
#include "driverset/eigen.hpp"
#include "driverset/graph.hpp"
#include "driverset/parallel.hpp"
#include "driverset/zero_forcing.hpp"

namespace driverset {

struct AnalyzeOptions {
  std::uint64_t seed = 0;
  EnumerationLimits limits{};
  double tolerance = kDefaultZeroTolerance;
  int jobs = 1;
  bool classify_sets = true;
};

struct OrbitReportRow {
  std::vector<int> representative;
  int size = 0;
  bool driver = false;
  bool zero_forcing = false;
  std::optional<DriverType> classification;
  std::string rule;
};

struct SetClassificationRow {
  std::vector<int> set;
  DriverType verdict = DriverType::kUndetermined;
  std::string rule;
};

struct DriverReport {
  std::string descriptor;
  int n = 0;
  int max_mult = 0;         // largest adjacency eigenvalue multiplicity
  int min_driver_size = 0;  // D
  long long driver_count = 0;
  int zero_forcing_num = 0;  // Z
  std::vector<OrbitReportRow> orbits;  // orbits of size-D subsets
  std::vector<std::vector<int>> driver_sets;
  std::vector<std::vector<int>> zero_forcing_sets;
  // One entry per driver orbit; the verdict extends to the orbit members.
  std::vector<std::pair<std::vector<int>, Classification>> classifications;
  // The same verdicts expanded to every minimum driver set.
  std::vector<SetClassificationRow> set_classifications;
  int numeric_disagreements = 0;
};

// Full per-graph analysis.  Exact verdicts decide everything; the numeric
// eigenspace check runs alongside as a cross-check and any disagreement is
// counted and reported on stderr, never folded into the result.
inline DriverReport analyze(const Graph& g, const std::string& descriptor,
                            const AnalyzeOptions& opts = {}) {
  DriverReport report;
  report.descriptor = descriptor;
  report.n = g.vertex_count();
  report.max_mult = max_multiplicity(g);

  DriverEnumeration enumeration = enumerate_min_driver_sets(g, opts.limits, opts.jobs);
  report.min_driver_size = enumeration.d;
  report.driver_count = enumeration.n_d;
  report.driver_sets = std::move(enumeration.sets);

  ZeroForcingResult zf = zero_forcing_number(g, opts.limits, opts.jobs);
  report.zero_forcing_num = zf.z;
  report.zero_forcing_sets = std::move(zf.sets);

  std::vector<int> driver_orbit_index;
  for (std::size_t i = 0; i < enumeration.orbits.size(); ++i)
    if (enumeration.orbits[i].is_driver) driver_orbit_index.push_back(static_cast<int>(i));

  std::vector<Classification> classifications;
  if (opts.classify_sets) {
    classifications =
        parallel_map(opts.jobs, static_cast<int>(driver_orbit_index.size()), [&](int t) {
          const auto& orbit =
              enumeration.orbits[static_cast<std::size_t>(driver_orbit_index[static_cast<std::size_t>(t)])];
          ClassifyOptions copts;
          copts.seed = mix_seed(opts.seed, static_cast<std::uint64_t>(t));
          return classify(g, orbit.representative, copts);
        });
  }

  auto numeric = parallel_map(opts.jobs, static_cast<int>(enumeration.orbits.size()), [&](int i) {
    return pbh_eigenspace_check(g, enumeration.orbits[static_cast<std::size_t>(i)].representative,
                                opts.tolerance);
  });

  int classified = 0;
  for (std::size_t i = 0; i < enumeration.orbits.size(); ++i) {
    const auto& orbit = enumeration.orbits[i];
    OrbitReportRow row;
    row.representative = orbit.representative;
    row.size = orbit.size;
    row.driver = orbit.is_driver;
    row.zero_forcing = is_zero_forcing_set(g, orbit.representative);
    if (orbit.is_driver && opts.classify_sets) {
      const Classification& c = classifications[static_cast<std::size_t>(classified)];
      row.classification = c.verdict;
      row.rule = c.rule;
      report.classifications.push_back({orbit.representative, c});
      for (const auto& member : orbit.members)
        report.set_classifications.push_back({member, c.verdict, c.rule});
      ++classified;
    }
    if (numeric[i] != orbit.is_driver) {
      ++report.numeric_disagreements;
      std::cerr << "numeric eigenspace check disagrees with the exact verdict on "
                << descriptor << "; keeping the exact result\n";
    }
    report.orbits.push_back(std::move(row));
  }
  return report;
}

inline nlohmann::json subset_to_json(const std::vector<int>& s) {
  return nlohmann::json(s);
}

inline nlohmann::json witness_to_json(const WeightedSystem& ws, const UniPoly& certificate) {
  nlohmann::json weights = nlohmann::json::array();
  for (std::size_t e = 0; e < ws.edge_weights().size(); ++e) {
    auto [u, v] = ws.graph().edges()[e];
    weights.push_back({u, v, rational_to_string(ws.edge_weights()[e])});
  }
  nlohmann::json diagonal = nlohmann::json::array();
  for (int v = 1; v <= ws.graph().vertex_count(); ++v) {
    const Rational& d = ws.diagonal()[static_cast<std::size_t>(v - 1)];
    if (d != 0) diagonal.push_back({v, rational_to_string(d)});
  }
  nlohmann::json gcd = nlohmann::json::array();
  for (const Rational& c : certificate.coefficients()) gcd.push_back(rational_to_string(c));
  return nlohmann::json{{"n", ws.graph().vertex_count()},
                        {"mode", weight_mode_name(ws.mode())},
                        {"weights", weights},
                        {"diagonal", diagonal},
                        {"certificate_gcd", gcd}};
}

inline nlohmann::json report_to_json(const DriverReport& r) {
  nlohmann::json orbits = nlohmann::json::array();
  for (const auto& row : r.orbits) {
    nlohmann::json o{{"representative", row.representative},
                     {"size", row.size},
                     {"driver", row.driver},
                     {"zero_forcing", row.zero_forcing}};
    if (row.classification) {
      o["classification"] = driver_type_name(*row.classification);
      o["rule"] = row.rule;
    }
    orbits.push_back(std::move(o));
  }
  std::vector<SetClassificationRow> rows = r.set_classifications;
  std::sort(rows.begin(), rows.end(),
            [](const SetClassificationRow& a, const SetClassificationRow& b) {
              return a.set < b.set;
            });
  nlohmann::json classifications = nlohmann::json::array();
  for (const auto& row : rows)
    classifications.push_back(nlohmann::json{{"set", row.set},
                                             {"verdict", driver_type_name(row.verdict)},
                                             {"rule", row.rule}});
  return nlohmann::json{{"schema", 1},
                        {"descriptor", r.descriptor},
                        {"n", r.n},
                        {"M", r.max_mult},
                        {"D", r.min_driver_size},
                        {"N_D", r.driver_count},
                        {"Z", r.zero_forcing_num},
                        {"orbits", orbits},
                        {"driver_sets", r.driver_sets},
                        {"zero_forcing_sets", r.zero_forcing_sets},
                        {"classifications", classifications},
                        {"numeric_disagreements", r.numeric_disagreements}};
}

namespace detail {

inline std::string subset_to_text(const std::vector<int>& s) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << "}";
  return os.str();
}

}  // namespace detail

inline std::string report_to_table(const DriverReport& r) {
  std::ostringstream os;
  os << "graph        " << r.descriptor << "\n";
  os << "n            " << r.n << "\n";
  os << "M            " << r.max_mult << "\n";
  os << "D            " << r.min_driver_size << "\n";
  os << "N_D          " << r.driver_count << "\n";
  os << "Z            " << r.zero_forcing_num << "\n";
  os << "\n";
  os << "orbit rep        size  driver  zforce  class\n";
  for (const auto& row : r.orbits) {
    std::string rep = detail::subset_to_text(row.representative);
    rep.resize(std::max<std::size_t>(rep.size(), 16), ' ');
    os << rep << " " << row.size << "     " << (row.driver ? "yes" : "no ") << "     "
       << (row.zero_forcing ? "yes" : "no ") << "     "
       << (row.classification ? driver_type_name(*row.classification) : "-") << "\n";
  }
  return os.str();
}

}  // namespace driverset
