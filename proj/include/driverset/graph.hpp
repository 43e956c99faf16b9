#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "driverset/errors.hpp"
#include "driverset/matrix.hpp"

namespace driverset {

enum class GraphFamily { kPath, kCycle, kHypercube, kCustom };

inline std::string family_name(GraphFamily f) {
  switch (f) {
    case GraphFamily::kPath: return "path";
    case GraphFamily::kCycle: return "cycle";
    case GraphFamily::kHypercube: return "hypercube";
    case GraphFamily::kCustom: return "custom";
  }
  return "custom";
}

// Simple undirected graph on vertices 1..n.  Immutable after construction;
// the family tag records which builder produced it.
class Graph {
 public:
  Graph(int n, std::vector<std::pair<int, int>> edges,
        GraphFamily family = GraphFamily::kCustom)
      : n_(n), family_(family) {
    if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
      if (u < 1 || u > n || v < 1 || v > n)
        throw std::invalid_argument("edge endpoint out of range");
      if (u == v) throw std::invalid_argument("self-loops are not allowed");
      auto [lo, hi] = std::minmax(u, v);
      if (!seen.insert({lo, hi}).second)
        throw std::invalid_argument("duplicate edge {" + std::to_string(lo) + "," +
                                    std::to_string(hi) + "}");
    }
    edges_.assign(seen.begin(), seen.end());
    adjacency_.assign(static_cast<std::size_t>(n) + 1, {});
    for (auto [u, v] : edges_) {
      adjacency_[static_cast<std::size_t>(u)].push_back(v);
      adjacency_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());
  }

  int vertex_count() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  GraphFamily family() const { return family_; }

  const std::vector<int>& neighbors(int v) const {
    check_vertex(v);
    return adjacency_[static_cast<std::size_t>(v)];
  }

  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& list = adjacency_[static_cast<std::size_t>(u)];
    return std::binary_search(list.begin(), list.end(), v);
  }

  void check_vertex(int v) const {
    if (v < 1 || v > n_) throw std::invalid_argument("vertex out of range");
  }

 private:
  int n_;
  GraphFamily family_;
  std::vector<std::pair<int, int>> edges_;       // sorted, u < v
  std::vector<std::vector<int>> adjacency_;      // 1-based, sorted lists
};

inline Graph path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges), GraphFamily::kPath);
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least three vertices");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
  edges.push_back({1, n});
  return Graph(n, std::move(edges), GraphFamily::kCycle);
}

// Vertex i corresponds to the binary word of i-1, so the adjacency matrix
// has the recursive block form [[A(Q_k), I], [I, A(Q_k)]].
inline Graph hypercube_graph(int k) {
  if (k < 1) throw std::invalid_argument("hypercube dimension must be positive");
  if (k > 20) throw capability_error("hypercube dimension too large");
  const int n = 1 << k;
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v <= n; ++v) {
    const int word = v - 1;
    for (int b = 0; b < k; ++b) {
      const int u = (word ^ (1 << b)) + 1;
      if (u > v) edges.push_back({v, u});
    }
  }
  return Graph(n, std::move(edges), GraphFamily::kHypercube);
}

inline Graph custom_graph(int n, std::vector<std::pair<int, int>> edges) {
  return Graph(n, std::move(edges), GraphFamily::kCustom);
}

// Graph descriptor: which builder to run and with what arguments.
struct GraphSpec {
  GraphFamily family = GraphFamily::kCustom;
  int parameter = 0;  // n for path/cycle, k for hypercube
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;
};

inline Graph build_graph(const GraphSpec& spec) {
  switch (spec.family) {
    case GraphFamily::kPath: return path_graph(spec.parameter);
    case GraphFamily::kCycle: return cycle_graph(spec.parameter);
    case GraphFamily::kHypercube: return hypercube_graph(spec.parameter);
    case GraphFamily::kCustom: return custom_graph(spec.vertex_count, spec.edges);
  }
  throw std::invalid_argument("unknown graph descriptor");
}

inline ExactMatrix adjacency(const Graph& g) {
  const int n = g.vertex_count();
  ExactMatrix a(n, n);
  for (auto [u, v] : g.edges()) {
    a.at(u - 1, v - 1) = 1;
    a.at(v - 1, u - 1) = 1;
  }
  return a;
}

inline constexpr int kUnreachable = -1;

// BFS shortest-path length; kUnreachable when i and j live in different
// components.
inline int distance(const Graph& g, int i, int j) {
  g.check_vertex(i);
  g.check_vertex(j);
  if (i == j) return 0;
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()) + 1, kUnreachable);
  std::deque<int> queue{i};
  dist[static_cast<std::size_t>(i)] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(v)) {
      if (dist[static_cast<std::size_t>(w)] != kUnreachable) continue;
      dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
      if (w == j) return dist[static_cast<std::size_t>(w)];
      queue.push_back(w);
    }
  }
  return kUnreachable;
}

// Bijection on 1..n.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> hit(images_.size() + 1, 0);
    for (int v : images_) {
      if (v < 1 || v > static_cast<int>(images_.size()) || hit[static_cast<std::size_t>(v)])
        throw std::invalid_argument("images do not form a permutation");
      hit[static_cast<std::size_t>(v)] = 1;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i + 1;
    return Permutation(std::move(images));
  }

  int size() const { return static_cast<int>(images_.size()); }

  int operator()(int v) const {
    if (v < 1 || v > size()) throw std::invalid_argument("vertex out of range");
    return images_[static_cast<std::size_t>(v - 1)];
  }

  const std::vector<int>& images() const { return images_; }

  // (a.then(b))(v) = b(a(v))
  Permutation then(const Permutation& b) const {
    if (size() != b.size()) throw std::invalid_argument("permutation sizes differ");
    std::vector<int> out(images_.size());
    for (int v = 1; v <= size(); ++v) out[static_cast<std::size_t>(v - 1)] = b((*this)(v));
    return Permutation(std::move(out));
  }

  Permutation inverse() const {
    std::vector<int> out(images_.size());
    for (int v = 1; v <= size(); ++v) out[static_cast<std::size_t>((*this)(v)-1)] = v;
    return Permutation(std::move(out));
  }

  std::vector<int> apply(const std::vector<int>& subset) const {
    std::vector<int> out;
    out.reserve(subset.size());
    for (int v : subset) out.push_back((*this)(v));
    std::sort(out.begin(), out.end());
    return out;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.images_ == b.images_;
  }

 private:
  std::vector<int> images_;
};

inline bool is_automorphism(const Graph& g, const Permutation& p) {
  if (p.size() != g.vertex_count()) return false;
  for (auto [u, v] : g.edges())
    if (!g.has_edge(p(u), p(v))) return false;
  return true;
}

inline constexpr int kAutomorphismSearchCap = 12;

namespace detail {

inline void automorphism_backtrack(const Graph& g, std::vector<int>& image,
                                   std::vector<char>& used,
                                   const std::vector<std::vector<int>>& profile, int v,
                                   std::vector<Permutation>& out) {
  const int n = g.vertex_count();
  if (v > n) {
    out.emplace_back(std::vector<int>(image.begin() + 1, image.end()));
    return;
  }
  for (int c = 1; c <= n; ++c) {
    if (used[static_cast<std::size_t>(c)]) continue;
    if (profile[static_cast<std::size_t>(v)] != profile[static_cast<std::size_t>(c)]) continue;
    bool ok = true;
    for (int u = 1; u < v && ok; ++u)
      if (g.has_edge(u, v) != g.has_edge(image[static_cast<std::size_t>(u)], c)) ok = false;
    if (!ok) continue;
    image[static_cast<std::size_t>(v)] = c;
    used[static_cast<std::size_t>(c)] = 1;
    automorphism_backtrack(g, image, used, profile, v + 1, out);
    used[static_cast<std::size_t>(c)] = 0;
  }
}

}  // namespace detail

// Complete automorphism list.  Path, cycle and hypercube groups come from
// their closed forms; custom graphs run an exhaustive backtracking search
// (degree and neighbor-degree pruning) capped at `search_cap` vertices.
inline std::vector<Permutation> automorphism_group(const Graph& g,
                                                   int search_cap = kAutomorphismSearchCap) {
  const int n = g.vertex_count();
  std::vector<Permutation> out;
  switch (g.family()) {
    case GraphFamily::kPath: {
      out.push_back(Permutation::identity(n));
      if (n >= 2) {
        std::vector<int> refl(static_cast<std::size_t>(n));
        for (int v = 1; v <= n; ++v) refl[static_cast<std::size_t>(v - 1)] = n + 1 - v;
        out.emplace_back(std::move(refl));
      }
      break;
    }
    case GraphFamily::kCycle: {
      // Rotations w -> w+t and reflections w -> t-w on 0-based labels.
      for (int t = 0; t < n; ++t) {
        std::vector<int> rot(static_cast<std::size_t>(n));
        for (int v = 1; v <= n; ++v) rot[static_cast<std::size_t>(v - 1)] = (v - 1 + t) % n + 1;
        out.emplace_back(std::move(rot));
      }
      for (int t = 0; t < n; ++t) {
        std::vector<int> refl(static_cast<std::size_t>(n));
        for (int v = 1; v <= n; ++v)
          refl[static_cast<std::size_t>(v - 1)] = ((t - (v - 1)) % n + n) % n + 1;
        out.emplace_back(std::move(refl));
      }
      break;
    }
    case GraphFamily::kHypercube: {
      int k = 0;
      while ((1 << k) < n) ++k;
      // Coordinate permutations composed with coordinate flips.
      std::vector<int> perm(static_cast<std::size_t>(k));
      for (int b = 0; b < k; ++b) perm[static_cast<std::size_t>(b)] = b;
      do {
        for (int mask = 0; mask < (1 << k); ++mask) {
          std::vector<int> images(static_cast<std::size_t>(n));
          for (int v = 1; v <= n; ++v) {
            int w = v - 1, mapped = 0;
            for (int b = 0; b < k; ++b)
              if ((w >> b) & 1) mapped |= 1 << perm[static_cast<std::size_t>(b)];
            images[static_cast<std::size_t>(v - 1)] = (mapped ^ mask) + 1;
          }
          out.emplace_back(std::move(images));
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
      break;
    }
    case GraphFamily::kCustom: {
      if (n > search_cap)
        throw capability_error("automorphism search capped at " +
                               std::to_string(search_cap) + " vertices (got " +
                               std::to_string(n) + ")");
      // Per-vertex invariant: degree plus sorted neighbor degrees.
      std::vector<std::vector<int>> profile(static_cast<std::size_t>(n) + 1);
      for (int v = 1; v <= n; ++v) {
        auto& p = profile[static_cast<std::size_t>(v)];
        p.push_back(g.degree(v));
        for (int w : g.neighbors(v)) p.push_back(g.degree(w));
        std::sort(p.begin() + 1, p.end());
      }
      std::vector<int> image(static_cast<std::size_t>(n) + 1, 0);
      std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
      detail::automorphism_backtrack(g, image, used, profile, 1, out);
      break;
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Permutation& a, const Permutation& b) { return a.images() < b.images(); });
  return out;
}

struct SubsetOrbit {
  std::vector<int> representative;           // lexicographically least member
  std::vector<std::vector<int>> members;     // sorted lexicographically
  int size() const { return static_cast<int>(members.size()); }
};

// Partition of all k-subsets of V into orbits under the given group.
// Orbits are sorted by representative.
inline std::vector<SubsetOrbit> subset_orbits(const Graph& g, int k,
                                              const std::vector<Permutation>& group) {
  const int n = g.vertex_count();
  if (k < 1 || k > n) throw std::invalid_argument("subset size out of range");
  if (n > 31) throw capability_error("subset enumeration limited to 31 vertices");

  std::vector<std::uint32_t> masks;
  std::vector<int> comb(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) comb[static_cast<std::size_t>(i)] = i;
  while (true) {
    std::uint32_t m = 0;
    for (int i : comb) m |= 1u << i;
    masks.push_back(m);
    int pos = k - 1;
    while (pos >= 0 && comb[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
    if (pos < 0) break;
    ++comb[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < k; ++i)
      comb[static_cast<std::size_t>(i)] = comb[static_cast<std::size_t>(i - 1)] + 1;
  }

  std::vector<int> orbit_of(masks.size(), -1);
  std::unordered_map<std::uint32_t, std::size_t> index_of;
  index_of.reserve(masks.size() * 2);
  for (std::size_t i = 0; i < masks.size(); ++i) index_of[masks[i]] = i;

  auto apply_to_mask = [&](const Permutation& p, std::uint32_t m) {
    std::uint32_t out = 0;
    for (int v = 1; v <= n; ++v)
      if (m & (1u << (v - 1))) out |= 1u << (p(v) - 1);
    return out;
  };

  std::vector<SubsetOrbit> orbits;
  for (std::size_t i = 0; i < masks.size(); ++i) {
    if (orbit_of[i] >= 0) continue;
    const int id = static_cast<int>(orbits.size());
    std::deque<std::size_t> queue{i};
    orbit_of[i] = id;
    std::vector<std::uint32_t> members{masks[i]};
    while (!queue.empty()) {
      std::size_t cur = queue.front();
      queue.pop_front();
      for (const Permutation& p : group) {
        std::uint32_t img = apply_to_mask(p, masks[cur]);
        std::size_t idx = index_of.at(img);
        if (orbit_of[idx] < 0) {
          orbit_of[idx] = id;
          members.push_back(img);
          queue.push_back(idx);
        }
      }
    }
    SubsetOrbit orbit;
    for (std::uint32_t m : members) {
      std::vector<int> subset;
      for (int v = 1; v <= n; ++v)
        if (m & (1u << (v - 1))) subset.push_back(v);
      orbit.members.push_back(std::move(subset));
    }
    std::sort(orbit.members.begin(), orbit.members.end());
    orbit.representative = orbit.members.front();
    orbits.push_back(std::move(orbit));
  }
  std::sort(orbits.begin(), orbits.end(), [](const SubsetOrbit& a, const SubsetOrbit& b) {
    return a.representative < b.representative;
  });
  return orbits;
}

inline std::vector<SubsetOrbit> subset_orbits(const Graph& g, int k,
                                              int search_cap = kAutomorphismSearchCap) {
  return subset_orbits(g, k, automorphism_group(g, search_cap));
}

}  // namespace driverset
