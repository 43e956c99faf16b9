#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "driverset/charpoly.hpp"
#include "driverset/graph.hpp"
#include "driverset/matrix.hpp"
#include "driverset/polynomial.hpp"

namespace driverset {

enum class WeightMode { kSym, kSym0 };

inline std::string weight_mode_name(WeightMode m) {
  return m == WeightMode::kSym ? "Sym" : "Sym0";
}

// Symmetric weight assignment honoring the graph's zero pattern: nonzero
// rationals exactly on the edges, plus a diagonal that is identically zero
// in Sym0 mode and free in Sym mode.
class WeightedSystem {
 public:
  WeightedSystem(Graph graph, std::vector<Rational> edge_weights,
                 std::vector<Rational> diagonal, WeightMode mode)
      : graph_(std::move(graph)),
        edge_weights_(std::move(edge_weights)),
        diagonal_(std::move(diagonal)),
        mode_(mode) {
    if (edge_weights_.size() != graph_.edges().size())
      throw std::invalid_argument("one weight per edge required");
    if (diagonal_.size() != static_cast<std::size_t>(graph_.vertex_count()))
      throw std::invalid_argument("one diagonal entry per vertex required");
    for (const Rational& w : edge_weights_)
      if (w == 0) throw std::invalid_argument("edge weights must be nonzero");
    if (mode_ == WeightMode::kSym0)
      for (const Rational& d : diagonal_)
        if (d != 0) throw std::invalid_argument("Sym0 systems have a zero diagonal");
  }

  static WeightedSystem from_weight_map(Graph graph,
                                        const std::map<std::pair<int, int>, Rational>& weights,
                                        const std::map<int, Rational>& diagonal,
                                        WeightMode mode) {
    std::vector<Rational> edge_weights;
    edge_weights.reserve(graph.edges().size());
    for (auto [u, v] : graph.edges()) {
      auto it = weights.find({u, v});
      if (it == weights.end()) it = weights.find({v, u});
      if (it == weights.end())
        throw std::invalid_argument("missing weight for edge {" + std::to_string(u) + "," +
                                    std::to_string(v) + "}");
      edge_weights.push_back(it->second);
    }
    if (weights.size() != graph.edges().size())
      throw std::invalid_argument("weight map carries non-edges");
    std::vector<Rational> diag(static_cast<std::size_t>(graph.vertex_count()), Rational(0));
    for (auto& [v, value] : diagonal) {
      if (v < 1 || v > graph.vertex_count())
        throw std::invalid_argument("diagonal vertex out of range");
      diag[static_cast<std::size_t>(v - 1)] = value;
    }
    return WeightedSystem(std::move(graph), std::move(edge_weights), std::move(diag), mode);
  }

  const Graph& graph() const { return graph_; }
  WeightMode mode() const { return mode_; }
  const std::vector<Rational>& edge_weights() const { return edge_weights_; }
  const std::vector<Rational>& diagonal() const { return diagonal_; }

  const Rational& weight(int u, int v) const {
    if (u > v) std::swap(u, v);
    const auto& edges = graph_.edges();
    auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(u, v));
    if (it == edges.end() || *it != std::make_pair(u, v))
      throw std::invalid_argument("not an edge: {" + std::to_string(u) + "," +
                                  std::to_string(v) + "}");
    return edge_weights_[static_cast<std::size_t>(it - edges.begin())];
  }

  ExactMatrix to_matrix() const {
    const int n = graph_.vertex_count();
    ExactMatrix x(n, n);
    for (std::size_t e = 0; e < edge_weights_.size(); ++e) {
      auto [u, v] = graph_.edges()[e];
      x.at(u - 1, v - 1) = edge_weights_[e];
      x.at(v - 1, u - 1) = edge_weights_[e];
    }
    for (int v = 0; v < n; ++v) x.at(v, v) = diagonal_[static_cast<std::size_t>(v)];
    return x;
  }

 private:
  Graph graph_;
  std::vector<Rational> edge_weights_;  // aligned with graph_.edges()
  std::vector<Rational> diagonal_;      // 0-based
  WeightMode mode_;
};

// splitmix64 finalizer; derives independent per-task seeds.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (salt + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Deterministic per seed: edge weights are nonzero integers in [-9,9] over
// denominators in [1,4], drawn in sorted edge order; Sym mode then draws
// diagonal integers in [-9,9] in vertex order.  The raw engine output is
// mapped by modulus so results do not depend on the platform.
inline WeightedSystem sample_weighted(const Graph& g, WeightMode mode, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto nonzero_digit = [&]() {
    const int idx = static_cast<int>(rng() % 18);  // -9..-1, 1..9
    return idx < 9 ? idx - 9 : idx - 8;
  };
  std::vector<Rational> weights;
  weights.reserve(g.edges().size());
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const int num = nonzero_digit();
    const int den = 1 + static_cast<int>(rng() % 4);
    weights.push_back(make_rational(num, den));
  }
  std::vector<Rational> diagonal(static_cast<std::size_t>(g.vertex_count()), Rational(0));
  if (mode == WeightMode::kSym)
    for (auto& d : diagonal) d = Rational(static_cast<int>(rng() % 19) - 9);
  return WeightedSystem(g, std::move(weights), std::move(diagonal), mode);
}

namespace detail {

inline void require_family(const WeightedSystem& ws, GraphFamily family, WeightMode mode,
                           const char* what) {
  if (ws.graph().family() != family || ws.mode() != mode)
    throw std::invalid_argument(std::string(what) + ": wrong graph family or weight mode");
}

}  // namespace detail

// Closed-form determinant of a zero-diagonal path system: 0 for odd n,
// otherwise (-1)^(n/2) times the product of the squared odd-position
// weights x_{12}^2 x_{34}^2 ... x_{n-1,n}^2.
inline Rational sym0_path_det_formula(const WeightedSystem& ws) {
  detail::require_family(ws, GraphFamily::kPath, WeightMode::kSym0, "sym0_path_det_formula");
  const int n = ws.graph().vertex_count();
  if (n % 2 == 1) return Rational(0);
  Rational det = (n / 2) % 2 == 0 ? 1 : -1;
  for (int k = 1; k < n; k += 2) {
    const Rational& w = ws.weight(k, k + 1);
    det *= w * w;
  }
  return det;
}

namespace detail {

inline WeightedSystem path_block(const WeightedSystem& ws, int first, int last) {
  // Relabels vertices first..last of a path/cycle system to 1..size.
  const int size = last - first + 1;
  std::vector<Rational> weights;
  for (int v = first; v < last; ++v) weights.push_back(ws.weight(v, v + 1));
  return WeightedSystem(path_graph(size), std::move(weights),
                        std::vector<Rational>(static_cast<std::size_t>(size), Rational(0)),
                        WeightMode::kSym0);
}

}  // namespace detail

// Deleting row/column i of a zero-diagonal path system leaves two
// independent path blocks: Y on 1..i-1 and Z on i+1..n.
inline std::pair<WeightedSystem, WeightedSystem> split_path(const WeightedSystem& ws, int i) {
  detail::require_family(ws, GraphFamily::kPath, WeightMode::kSym0, "split_path");
  const int n = ws.graph().vertex_count();
  if (n < 3) throw std::invalid_argument("split_path needs at least three vertices");
  if (i < 2 || i > n - 1) throw std::invalid_argument("split vertex must be interior");
  return {detail::path_block(ws, 1, i - 1), detail::path_block(ws, i + 1, n)};
}

struct CyclePairNormalization {
  Permutation to_canonical;  // dihedral element mapping the pair to {1, j}
  int j = 0;
};

// Picks the dihedral element that maps the pair onto {1, j} with the
// smallest j; the scan order is fixed, so the chosen element is
// deterministic.  The normalized j equals d(i,j) + 1.
inline CyclePairNormalization normalize_cycle_pair(int n, std::pair<int, int> pair) {
  if (n < 3) throw std::invalid_argument("cycle needs at least three vertices");
  auto [i, j] = pair;
  if (i < 1 || i > n || j < 1 || j > n || i == j)
    throw std::invalid_argument("invalid cycle pair");
  const Graph cycle = cycle_graph(n);
  CyclePairNormalization best{Permutation::identity(n), n + 1};
  for (const Permutation& p : automorphism_group(cycle)) {
    const int a = p(i), b = p(j);
    if (std::min(a, b) != 1) continue;
    if (std::max(a, b) < best.j) best = {p, std::max(a, b)};
  }
  return best;
}

// Deleting rows/columns 1 and j of a zero-diagonal cycle system leaves two
// path blocks: Y on 2..j-1 and Z on j+1..n.  Arbitrary pairs are first
// normalized to {1, j} by a dihedral element.
inline std::pair<WeightedSystem, WeightedSystem> split_cycle(const WeightedSystem& ws,
                                                             std::pair<int, int> pair) {
  detail::require_family(ws, GraphFamily::kCycle, WeightMode::kSym0, "split_cycle");
  const int n = ws.graph().vertex_count();
  if (n < 6) throw std::invalid_argument("split_cycle needs at least six vertices");
  const auto norm = normalize_cycle_pair(n, pair);
  if (norm.j < 3)
    throw std::invalid_argument("split_cycle: adjacent pairs leave no interior block");
  // Rotate the weights into the canonical frame.
  const Permutation inv = norm.to_canonical.inverse();
  std::vector<Rational> weights;
  weights.reserve(ws.edge_weights().size());
  for (auto [u, v] : ws.graph().edges()) weights.push_back(ws.weight(inv(u), inv(v)));
  WeightedSystem canonical(cycle_graph(n), std::move(weights),
                           std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)),
                           WeightMode::kSym0);
  return {detail::path_block(canonical, 2, norm.j - 1),
          detail::path_block(canonical, norm.j + 1, n)};
}

struct SharedEigenvalue {
  bool shares = false;
  UniPoly certificate;  // monic gcd of the two characteristic polynomials
};

// Two blocks share an eigenvalue exactly when their characteristic
// polynomials have a non-constant gcd; that gcd is the certificate.
inline SharedEigenvalue blocks_share_eigenvalue(const WeightedSystem& y,
                                                const WeightedSystem& z) {
  const UniPoly cert = poly_gcd(char_poly(y.to_matrix()), char_poly(z.to_matrix()));
  return {cert.degree() >= 1, cert};
}

}  // namespace driverset
