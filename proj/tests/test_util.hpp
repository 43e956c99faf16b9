#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "driverset/driverset.hpp"

namespace testutil {

using namespace driverset;

// Brute-force automorphism oracle: filters all n! permutations.  Only for
// tiny graphs; independent of the library's backtracking search.
inline std::vector<Permutation> brute_force_automorphisms(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> out;
  do {
    Permutation p(images);
    if (is_automorphism(g, p)) out.push_back(p);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

// Brute-force orbit partition of k-subsets under a (known good) group.
inline std::vector<std::vector<std::vector<int>>> brute_force_orbits(
    int n, int k, const std::vector<Permutation>& group) {
  std::vector<std::vector<int>> subsets;
  std::vector<int> comb(static_cast<std::size_t>(k));
  std::iota(comb.begin(), comb.end(), 1);
  while (true) {
    subsets.push_back(comb);
    int pos = k - 1;
    while (pos >= 0 && comb[static_cast<std::size_t>(pos)] == n - k + pos + 1) --pos;
    if (pos < 0) break;
    ++comb[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < k; ++i)
      comb[static_cast<std::size_t>(i)] = comb[static_cast<std::size_t>(i - 1)] + 1;
  }
  std::map<std::vector<int>, int> orbit_of;
  std::vector<std::vector<std::vector<int>>> orbits;
  for (const auto& s : subsets) {
    if (orbit_of.count(s)) continue;
    const int id = static_cast<int>(orbits.size());
    std::vector<std::vector<int>> members;
    std::vector<std::vector<int>> frontier{s};
    orbit_of[s] = id;
    members.push_back(s);
    while (!frontier.empty()) {
      auto cur = frontier.back();
      frontier.pop_back();
      for (const auto& p : group) {
        auto img = p.apply(cur);
        if (!orbit_of.count(img)) {
          orbit_of[img] = id;
          members.push_back(img);
          frontier.push_back(img);
        }
      }
    }
    std::sort(members.begin(), members.end());
    orbits.push_back(std::move(members));
  }
  return orbits;
}

// Seeded Erdos-Renyi-style graph with edge probability 1/2.
inline Graph random_graph(std::uint64_t seed, int max_vertices = 8) {
  std::mt19937_64 rng(seed);
  const int n = 3 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_vertices - 2));
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (rng() & 1) edges.push_back({i, j});
  return custom_graph(n, std::move(edges));
}

inline int euler_totient(int m) {
  int count = 0;
  for (int i = 1; i <= m; ++i)
    if (std::gcd(i, m) == 1) ++count;
  return count;
}

// Cofactor-expansion determinant, independent of the elimination route.
inline Rational cofactor_det(const ExactMatrix& m) {
  const int n = m.rows();
  if (n == 0) return Rational(1);
  if (n == 1) return m.at(0, 0);
  Rational det = 0;
  for (int j = 0; j < n; ++j) {
    if (m.at(0, j) == 0) continue;
    std::vector<int> cols;
    for (int c = 0; c < n; ++c)
      if (c != j) cols.push_back(c);
    std::vector<int> rows;
    for (int r = 1; r < n; ++r) rows.push_back(r);
    const Rational minor = cofactor_det(m.select_rows(rows).select_cols(cols));
    det += (j % 2 == 0 ? 1 : -1) * m.at(0, j) * minor;
  }
  return det;
}

inline std::vector<std::vector<int>> all_subsets_of_size(int n, int k) {
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

}  // namespace testutil
