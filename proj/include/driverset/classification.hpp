#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "driverset/controllability.hpp"
#include "driverset/errors.hpp"
#include "driverset/graph.hpp"
#include "driverset/polynomial.hpp"
#include "driverset/weighted_system.hpp"
#include "driverset/zero_forcing.hpp"

namespace driverset {

enum class DriverType { kTypeI, kTypeII, kNotStrongSym0, kUndetermined };

inline std::string driver_type_name(DriverType t) {
  switch (t) {
    case DriverType::kTypeI: return "type_I";
    case DriverType::kTypeII: return "type_II";
    case DriverType::kNotStrongSym0: return "not_strong_sym0";
    case DriverType::kUndetermined: return "undetermined";
  }
  return "undetermined";
}

struct Classification {
  DriverType verdict = DriverType::kUndetermined;
  std::string rule;                       // which criterion decided it
  std::optional<WeightedSystem> witness;  // uncontrollable weighted system, when one exists
  std::optional<UniPoly> certificate;     // non-constant lambda-gcd certificate
};

struct CertifiedWitness {
  WeightedSystem system;
  UniPoly certificate;
};

// Rational weights for a path block whose spectrum contains `target`.
// Sizes 2..4 come from fixed families; larger blocks fix an all-ones prefix
// and solve the last two weights on the conic q^2 = t^2 - c*s^2 through the
// rational point (t, 0), which avoids any square-root obstruction.
inline std::vector<Rational> path_block_weights_with_eigenvalue(int size,
                                                                const Rational& target) {
  if (size < 2) throw std::invalid_argument("block must have at least two vertices");
  if (target == 0) throw std::invalid_argument("target eigenvalue must be nonzero");
  const Rational& t = target;
  if (size == 2) return {t};                                    // spectrum {-t, t}
  if (size == 3) return {t * Rational(3, 5), t * Rational(4, 5)};  // {0, -t, t}
  if (size == 4) return {t * 3, t * 8, t * 3};                  // {-9t, -t, t, 9t}

  for (long prefix = 1; prefix <= 4; ++prefix) {
    std::vector<Rational> weights(static_cast<std::size_t>(size - 1), Rational(prefix));
    // Continuants of the leading blocks at lambda = t.
    std::vector<Rational> p(static_cast<std::size_t>(size) + 1);
    p[0] = 1;
    p[1] = t;
    for (int k = 2; k <= size - 2; ++k)
      p[static_cast<std::size_t>(k)] = t * p[static_cast<std::size_t>(k - 1)] -
                                       Rational(prefix * prefix) * p[static_cast<std::size_t>(k - 2)];
    const Rational big_p = p[static_cast<std::size_t>(size - 2)];
    const Rational small_p = p[static_cast<std::size_t>(size - 3)];
    if (big_p == 0) continue;
    const Rational c = t * small_p / big_p;
    for (long k = 1; k <= 8; ++k) {
      const Rational denom = Rational(k * k) + c;
      if (denom == 0) continue;
      const Rational s = Rational(-2 * k) * t / denom;
      const Rational q = t + Rational(k) * s;
      if (s == 0 || q == 0) continue;
      weights[static_cast<std::size_t>(size - 3)] = s;
      weights[static_cast<std::size_t>(size - 2)] = q;
      // p_{size}(t) = t*(t*P2 - s^2*P3) - q^2*P2 must vanish.
      const Rational tail = t * (t * big_p - s * s * small_p) - q * q * big_p;
      if (tail == 0) return weights;
    }
  }
  throw capability_error("no rational block weights found for size " + std::to_string(size));
}

// Eigenvector of the symmetric tridiagonal system (weights on the
// off-diagonal, free diagonal) for a rational eigenvalue, via the forward
// three-term recurrence with v_1 = 1.  Endpoints are always nonzero.
inline std::vector<Rational> tridiagonal_eigenvector(const std::vector<Rational>& weights,
                                                     const std::vector<Rational>& diagonal,
                                                     const Rational& eigenvalue) {
  const int m = static_cast<int>(diagonal.size());
  if (m < 1 || weights.size() + 1 != diagonal.size())
    throw std::invalid_argument("tridiagonal sizes inconsistent");
  std::vector<Rational> v(static_cast<std::size_t>(m));
  v[0] = 1;
  for (int k = 0; k + 1 < m; ++k) {
    Rational rhs = (eigenvalue - diagonal[static_cast<std::size_t>(k)]) * v[static_cast<std::size_t>(k)];
    if (k > 0) rhs -= weights[static_cast<std::size_t>(k - 1)] * v[static_cast<std::size_t>(k - 1)];
    v[static_cast<std::size_t>(k + 1)] = rhs / weights[static_cast<std::size_t>(k)];
  }
  // The last row holds exactly when `eigenvalue` is in the spectrum.
  Rational last = (eigenvalue - diagonal[static_cast<std::size_t>(m - 1)]) * v[static_cast<std::size_t>(m - 1)];
  if (m > 1) last -= weights[static_cast<std::size_t>(m - 2)] * v[static_cast<std::size_t>(m - 2)];
  if (last != 0) throw std::invalid_argument("not an eigenvalue of the tridiagonal block");
  return v;
}

namespace detail {

inline const Rational& kWitnessEigenvalue() {
  static const Rational t(5);
  return t;
}

inline void certify_uncontrollable(const WeightedSystem& ws, const std::vector<int>& s,
                                   const char* what) {
  const ExactMatrix x = ws.to_matrix();
  if (pencil_controllable(x, s) ||
      kalman_controllable(x, input_matrix(s, ws.graph().vertex_count())))
    throw capability_error(std::string(what) + ": constructed witness failed verification");
}

// Interior path singleton: both blocks carry the shared eigenvalue, the two
// bridge weights stay 1.  A single bridge equation links the block
// eigenvectors, so the kernel vector always exists.
inline CertifiedWitness path_interior_witness(const Graph& g, int i) {
  const int n = g.vertex_count();
  const Rational& t = kWitnessEigenvalue();
  const auto wy = path_block_weights_with_eigenvalue(i - 1, t);
  const auto wz = path_block_weights_with_eigenvalue(n - i, t);
  std::vector<Rational> weights(static_cast<std::size_t>(n - 1), Rational(1));
  for (int k = 1; k <= i - 2; ++k)
    weights[static_cast<std::size_t>(k - 1)] = wy[static_cast<std::size_t>(k - 1)];
  for (int k = i + 1; k <= n - 1; ++k)
    weights[static_cast<std::size_t>(k - 1)] = wz[static_cast<std::size_t>(k - i - 1)];
  WeightedSystem ws(g, std::move(weights),
                    std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)),
                    WeightMode::kSym0);
  auto [y, z] = split_path(ws, i);
  const auto shared = blocks_share_eigenvalue(y, z);
  certify_uncontrollable(ws, {i}, "path witness");
  return {std::move(ws), shared.certificate};
}

// Cycle witness in the canonical frame {1, j}, mapped back to the original
// pair.  The cycle has two bridge equations, so one bridge weight is tuned
// to make them compatible:
//   x_{1,2} u_first * x_{j,j+1} w_first = x_{1,n} w_last * x_{j-1,j} u_last
// where u, w are block eigenvectors for the shared eigenvalue.
inline CertifiedWitness cycle_pair_witness(const Graph& g, const std::vector<int>& pair,
                                           bool diagonal_route) {
  const int n = g.vertex_count();
  const auto norm = normalize_cycle_pair(n, {pair[0], pair[1]});
  const int j = norm.j;
  const Rational& t = kWitnessEigenvalue();

  std::vector<Rational> wy, u;           // block on 2..j-1
  std::vector<Rational> diag_canonical(static_cast<std::size_t>(n), Rational(0));
  WeightMode mode = WeightMode::kSym0;
  Rational shared_value;
  if (j == 3) {
    // One-vertex block: its only eigenvalue is the diagonal entry, which is
    // 0 on the Sym0 route and raised to t on the free-diagonal route.
    u = {Rational(1)};
    if (diagonal_route) {
      diag_canonical[1] = t;
      mode = WeightMode::kSym;
      shared_value = t;
    } else {
      shared_value = 0;
    }
  } else {
    wy = path_block_weights_with_eigenvalue(j - 2, t);
    u = tridiagonal_eigenvector(wy, std::vector<Rational>(static_cast<std::size_t>(j - 2)), t);
    shared_value = t;
  }

  std::vector<Rational> wz, w;           // block on j+1..n
  if (shared_value == 0) {
    // Any zero-diagonal odd path block is singular; all-ones is the
    // simplest member.
    wz.assign(static_cast<std::size_t>(n - j - 1), Rational(1));
    w = tridiagonal_eigenvector(wz, std::vector<Rational>(static_cast<std::size_t>(n - j)),
                                Rational(0));
  } else {
    wz = path_block_weights_with_eigenvalue(n - j, t);
    w = tridiagonal_eigenvector(wz, std::vector<Rational>(static_cast<std::size_t>(n - j)), t);
  }

  const Rational tuned_bridge = (u.back() * w.back()) / (u.front() * w.front());

  std::map<std::pair<int, int>, Rational> canonical;
  canonical[{1, 2}] = 1;
  canonical[{j - 1, j}] = 1;
  canonical[{1, n}] = 1;
  canonical[{j, j + 1}] = tuned_bridge;
  for (int k = 2; k <= j - 2; ++k) canonical[{k, k + 1}] = wy[static_cast<std::size_t>(k - 2)];
  for (int k = j + 1; k <= n - 1; ++k)
    canonical[{k, k + 1}] = wz[static_cast<std::size_t>(k - j - 1)];

  // Map back through the inverse of the normalizing element.
  const Permutation inv = norm.to_canonical.inverse();
  std::map<std::pair<int, int>, Rational> original;
  for (auto& [edge, value] : canonical) {
    int a = inv(edge.first), b = inv(edge.second);
    if (a > b) std::swap(a, b);
    original[{a, b}] = value;
  }
  std::map<int, Rational> diagonal;
  for (int v = 1; v <= n; ++v)
    if (diag_canonical[static_cast<std::size_t>(v - 1)] != 0)
      diagonal[inv(v)] = diag_canonical[static_cast<std::size_t>(v - 1)];

  WeightedSystem ws = WeightedSystem::from_weight_map(g, original, diagonal, mode);

  const WeightedSystem yblock =
      (j == 3) ? WeightedSystem(path_graph(1), {}, {diag_canonical[1]},
                                diagonal_route ? WeightMode::kSym : WeightMode::kSym0)
               : WeightedSystem(path_graph(j - 2), wy,
                                std::vector<Rational>(static_cast<std::size_t>(j - 2)),
                                WeightMode::kSym0);
  const WeightedSystem zblock(path_graph(n - j), wz,
                              std::vector<Rational>(static_cast<std::size_t>(n - j)),
                              WeightMode::kSym0);
  UniPoly certificate = blocks_share_eigenvalue(yblock, zblock).certificate;
  certify_uncontrollable(ws, pair, "cycle witness");
  return {std::move(ws), std::move(certificate)};
}

// Second-vertex path driver on even paths: the free diagonal turns the
// one-vertex block into an eigenvalue-t block, which the opposite block
// matches.  This is the Sym-mode counterexample behind the type II verdict.
inline CertifiedWitness path_second_vertex_sym_witness(const Graph& g, int i) {
  const int n = g.vertex_count();
  const Rational& t = kWitnessEigenvalue();
  const int lone = (i == 2) ? 1 : n;
  const auto block = path_block_weights_with_eigenvalue(n - 2, t);
  std::vector<Rational> weights(static_cast<std::size_t>(n - 1), Rational(1));
  if (i == 2) {
    for (int k = 3; k <= n - 1; ++k)
      weights[static_cast<std::size_t>(k - 1)] = block[static_cast<std::size_t>(k - 3)];
  } else {
    for (int k = 1; k <= n - 3; ++k)
      weights[static_cast<std::size_t>(k - 1)] = block[static_cast<std::size_t>(k - 1)];
  }
  std::vector<Rational> diagonal(static_cast<std::size_t>(n), Rational(0));
  diagonal[static_cast<std::size_t>(lone - 1)] = t;
  WeightedSystem ws(g, std::move(weights), std::move(diagonal), WeightMode::kSym);
  const WeightedSystem yblock(path_graph(1), {}, {t}, WeightMode::kSym);
  const WeightedSystem zblock(path_graph(n - 2), block,
                              std::vector<Rational>(static_cast<std::size_t>(n - 2)),
                              WeightMode::kSym0);
  UniPoly certificate = blocks_share_eigenvalue(yblock, zblock).certificate;
  certify_uncontrollable(ws, {i}, "path type II witness");
  return {std::move(ws), std::move(certificate)};
}

}  // namespace detail

// Constructs an exactly-verified uncontrollable weighted system for the
// pair (g, s).  Driver sets that are strongly controllable over the
// zero-diagonal family but not over the free-diagonal family receive a
// free-diagonal witness; the remaining covered cases receive a
// zero-diagonal witness.  Only path singletons and cycle pairs have
// constructive witnesses; other graphs go through sampling in classify().
inline CertifiedWitness witness_not_strong(const Graph& g, const std::vector<int>& s) {
  detail::validate_subset(s, g.vertex_count(), /*allow_empty=*/false);
  const int n = g.vertex_count();
  if (g.family() == GraphFamily::kPath && s.size() == 1) {
    const int i = s[0];
    if (!path_driver_predicate(n, i))
      throw std::invalid_argument("witness_not_strong: {" + std::to_string(i) +
                                  "} is not a driver set for this path");
    if (i == 1 || i == n)
      throw std::invalid_argument("witness_not_strong: end vertices admit no counterexample");
    if (i == 2 || i == n - 1) return detail::path_second_vertex_sym_witness(g, i);
    return detail::path_interior_witness(g, i);
  }
  if (g.family() == GraphFamily::kCycle && s.size() == 2) {
    if (!cycle_driver_predicate(n, {s[0], s[1]}))
      throw std::invalid_argument("witness_not_strong: the pair is not a driver set");
    const int d = distance(g, s[0], s[1]);
    if (d == 1)
      throw std::invalid_argument("witness_not_strong: adjacent pairs admit no counterexample");
    if (d == 2 && n % 2 == 1) return detail::cycle_pair_witness(g, s, /*diagonal_route=*/true);
    return detail::cycle_pair_witness(g, s, /*diagonal_route=*/false);
  }
  throw std::invalid_argument("witness_not_strong: no constructive witness for this input");
}

struct ClassifyOptions {
  std::uint64_t seed = 0;
  int falsification_samples = 64;
};

// Classifies a driver set.  Zero forcing decides type I; the path and cycle
// verdicts come from the closed-form theory (universal statements are never
// decided by sampling); everything else is sampled falsification, where
// Undetermined is an honest outcome.
inline Classification classify(const Graph& g, const std::vector<int>& s,
                               const ClassifyOptions& opts = {}) {
  if (!is_driver_set(g, s))
    throw std::invalid_argument("classify: the given set is not a driver set");
  if (is_zero_forcing_set(g, s))
    return {DriverType::kTypeI, "zero_forcing_set", std::nullopt, std::nullopt};

  const int n = g.vertex_count();
  if (g.family() == GraphFamily::kPath && s.size() == 1) {
    const int i = s[0];
    if (i == 2 || i == n - 1) {
      auto witness = detail::path_second_vertex_sym_witness(g, i);
      return {DriverType::kTypeII, "path_second_vertex_even_n", std::move(witness.system),
              std::move(witness.certificate)};
    }
    auto witness = detail::path_interior_witness(g, i);
    return {DriverType::kNotStrongSym0, "path_interior_shared_block_eigenvalue",
            std::move(witness.system), std::move(witness.certificate)};
  }
  if (g.family() == GraphFamily::kCycle && s.size() == 2) {
    const int d = distance(g, s[0], s[1]);
    if (d == 2 && n % 2 == 1) {
      auto witness = detail::cycle_pair_witness(g, s, /*diagonal_route=*/true);
      return {DriverType::kTypeII, "cycle_distance_two_odd_n", std::move(witness.system),
              std::move(witness.certificate)};
    }
    const char* rule = d == 2 ? "cycle_distance_two_even_singular_block"
                              : "cycle_far_pair_shared_block_eigenvalue";
    auto witness = detail::cycle_pair_witness(g, s, /*diagonal_route=*/false);
    return {DriverType::kNotStrongSym0, rule, std::move(witness.system),
            std::move(witness.certificate)};
  }

  // Randomized falsification over the zero-diagonal family.
  for (int trial = 0; trial < opts.falsification_samples; ++trial) {
    WeightedSystem ws =
        sample_weighted(g, WeightMode::kSym0, mix_seed(opts.seed, static_cast<std::uint64_t>(trial)));
    const ExactMatrix x = ws.to_matrix();
    const UniPoly gcd = pencil_minor_gcd(x, s);
    if (gcd.degree() > 0)
      return {DriverType::kNotStrongSym0, "sampled_counterexample", std::move(ws),
              gcd};
  }
  return {DriverType::kUndetermined, "falsification_exhausted", std::nullopt, std::nullopt};
}

}  // namespace driverset
