#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "driverset/controllability.hpp"
#include "driverset/graph.hpp"
#include "driverset/parallel.hpp"

namespace driverset {

struct ForcingStep {
  int forcing = 0;  // black vertex with a single white neighbor
  int forced = 0;   // that neighbor
};

struct ForcingTrace {
  std::vector<int> initial;
  std::vector<ForcingStep> steps;
  std::vector<int> closure;  // sorted
};

// Runs the forcing rule to its fixed point.  The closure is independent of
// the order forces are applied in; the trace always fires the
// lowest-numbered eligible forcing vertex first so it is reproducible.
inline ForcingTrace forcing_closure(const Graph& g, const std::vector<int>& s) {
  detail::validate_subset(s, g.vertex_count(), /*allow_empty=*/false);
  const int n = g.vertex_count();
  std::vector<char> black(static_cast<std::size_t>(n) + 1, 0);
  for (int v : s) black[static_cast<std::size_t>(v)] = 1;

  ForcingTrace trace;
  trace.initial = s;
  bool progressed = true;
  while (progressed) {
    progressed = false;
    for (int v = 1; v <= n && !progressed; ++v) {
      if (!black[static_cast<std::size_t>(v)]) continue;
      int white_neighbor = 0, white_count = 0;
      for (int w : g.neighbors(v)) {
        if (black[static_cast<std::size_t>(w)]) continue;
        white_neighbor = w;
        if (++white_count > 1) break;
      }
      if (white_count == 1) {
        black[static_cast<std::size_t>(white_neighbor)] = 1;
        trace.steps.push_back({v, white_neighbor});
        progressed = true;
      }
    }
  }
  for (int v = 1; v <= n; ++v)
    if (black[static_cast<std::size_t>(v)]) trace.closure.push_back(v);
  return trace;
}

inline bool is_zero_forcing_set(const Graph& g, const std::vector<int>& s) {
  return static_cast<int>(forcing_closure(g, s).closure.size()) == g.vertex_count();
}

struct ZeroForcingResult {
  int z = 0;
  std::vector<std::vector<int>> sets;  // all minimum zero forcing sets, sorted
};

// Exhaustive search by increasing subset size; zero forcing is invariant
// under automorphisms so only orbit representatives are tested.
inline ZeroForcingResult zero_forcing_number(const Graph& g,
                                             const EnumerationLimits& limits = {},
                                             int jobs = 1) {
  const int n = g.vertex_count();
  if (n > limits.max_vertices)
    throw capability_error("zero forcing search capped at " +
                           std::to_string(limits.max_vertices) + " vertices (got " +
                           std::to_string(n) + "); raise the cap to override");
  const auto group = detail::group_or_trivial(g, limits.automorphism_cap);
  for (int k = 1; k <= n; ++k) {
    auto orbits = subset_orbits(g, k, group);
    auto verdicts = parallel_map(jobs, static_cast<int>(orbits.size()), [&](int i) {
      return is_zero_forcing_set(g, orbits[static_cast<std::size_t>(i)].representative);
    });
    ZeroForcingResult out;
    out.z = k;
    for (std::size_t i = 0; i < orbits.size(); ++i)
      if (verdicts[i])
        out.sets.insert(out.sets.end(), orbits[i].members.begin(), orbits[i].members.end());
    if (!out.sets.empty()) {
      std::sort(out.sets.begin(), out.sets.end());
      return out;
    }
  }
  // S = V always forces trivially, so the loop cannot fall through.
  throw std::logic_error("zero forcing search exhausted");
}

}  // namespace driverset
