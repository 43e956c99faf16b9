#pragma once

#include <algorithm>
#include <cassert>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "driverset/charpoly.hpp"
#include "driverset/errors.hpp"
#include "driverset/graph.hpp"
#include "driverset/matrix.hpp"
#include "driverset/parallel.hpp"
#include "driverset/polynomial.hpp"

namespace driverset {

namespace detail {

inline void validate_subset(const std::vector<int>& s, int n, bool allow_empty) {
  if (!allow_empty && s.empty()) throw std::invalid_argument("vertex subset is empty");
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 1 || s[i] > n) throw std::invalid_argument("subset vertex out of range");
    if (i > 0 && s[i] <= s[i - 1])
      throw std::invalid_argument("subset must be strictly increasing");
  }
}

}  // namespace detail

// n x |s| matrix whose columns are the unit vectors indexed by s.
inline ExactMatrix input_matrix(const std::vector<int>& s, int n) {
  detail::validate_subset(s, n, /*allow_empty=*/false);
  ExactMatrix b(n, static_cast<int>(s.size()));
  for (std::size_t j = 0; j < s.size(); ++j) b.at(s[j] - 1, static_cast<int>(j)) = 1;
  return b;
}

// Exact rank test on the controllability matrix [B AB ... A^(n-1)B].
// Blocks are produced iteratively; the rank is computed once at the end.
inline bool kalman_controllable(const ExactMatrix& a, const ExactMatrix& b) {
  if (!a.is_square()) throw std::invalid_argument("system matrix must be square");
  if (b.rows() != a.rows()) throw std::invalid_argument("input matrix row count mismatch");
  const int n = a.rows();
  const int k = b.cols();
  if (n == 0) return true;
  if (k == 0) return false;
  ExactMatrix ctrl(n, n * k);
  ExactMatrix block = b;
  for (int j = 0; j < n; ++j) {
    if (j > 0) block = a * block;
    for (int i = 0; i < n; ++i)
      for (int c = 0; c < k; ++c) ctrl.at(i, j * k + c) = block.at(i, c);
  }
  return rank_exact(ctrl) == n;
}

// Monic gcd of all maximal minors of (x - lambda*I) with the rows of s
// deleted, as polynomials in lambda.  The principal minor on the kept
// columns is monic of full degree, so the gcd is never the zero polynomial;
// minors are evaluated pointwise and interpolated, and the scan stops as
// soon as the gcd drops to a constant.
inline UniPoly pencil_minor_gcd(const ExactMatrix& x, const std::vector<int>& s) {
  if (!x.is_symmetric()) throw std::invalid_argument("pencil test needs a symmetric matrix");
  const int n = x.rows();
  detail::validate_subset(s, n, /*allow_empty=*/true);
  const int r = n - static_cast<int>(s.size());
  if (r == 0) return UniPoly::constant(Rational(1));

  std::vector<int> kept;
  kept.reserve(static_cast<std::size_t>(r));
  for (int v = 0, si = 0; v < n; ++v) {
    if (si < static_cast<int>(s.size()) && s[static_cast<std::size_t>(si)] - 1 == v) {
      ++si;
      continue;
    }
    kept.push_back(v);
  }

  UniPoly g = char_poly(x.select_rows(kept).select_cols(kept), n);
  if (g.degree() == 0) return g.monic();

  // (x - t*I) restricted to the kept rows, for interpolation nodes 0..r.
  std::vector<Rational> points(static_cast<std::size_t>(r) + 1);
  std::vector<ExactMatrix> evaluated;
  evaluated.reserve(points.size());
  for (int t = 0; t <= r; ++t) {
    points[static_cast<std::size_t>(t)] = t;
    ExactMatrix e(r, n);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < n; ++j) {
        e.at(i, j) = x.at(kept[static_cast<std::size_t>(i)], j);
        if (kept[static_cast<std::size_t>(i)] == j) e.at(i, j) -= t;
      }
    evaluated.push_back(std::move(e));
  }

  std::vector<int> cols(static_cast<std::size_t>(r));
  std::iota(cols.begin(), cols.end(), 0);
  while (true) {
    if (cols != kept) {  // the principal minor is already in g
      std::vector<Rational> values(points.size());
      for (std::size_t t = 0; t < points.size(); ++t)
        values[t] = det_exact(evaluated[t].select_cols(cols));
      g = poly_gcd(g, interpolate(points, values));
      if (g.degree() == 0) break;
    }
    int pos = r - 1;
    while (pos >= 0 && cols[static_cast<std::size_t>(pos)] == n - r + pos) --pos;
    if (pos < 0) break;
    ++cols[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < r; ++i)
      cols[static_cast<std::size_t>(i)] = cols[static_cast<std::size_t>(i - 1)] + 1;
  }
  return g;
}

// Exact strong-rank test: (x, B_s) is controllable iff the deleted-row
// pencil keeps full row rank for every lambda, i.e. the minor gcd is a
// nonzero constant.
inline bool pencil_controllable(const ExactMatrix& x, const std::vector<int>& s) {
  if (static_cast<int>(s.size()) == x.rows()) return true;
  return pencil_minor_gcd(x, s).degree() == 0;
}

inline bool is_driver_set(const Graph& g, const std::vector<int>& s) {
  detail::validate_subset(s, g.vertex_count(), /*allow_empty=*/false);
  const ExactMatrix a = adjacency(g);
  const bool verdict = kalman_controllable(a, input_matrix(s, g.vertex_count()));
  assert(verdict == pencil_controllable(a, s));
  return verdict;
}

// Closed form for path graphs: {i} drives P_n iff gcd(i, n+1) = 1.
inline bool path_driver_predicate(int n, int i) {
  if (n < 1) throw std::invalid_argument("path needs at least one vertex");
  if (i < 1 || i > n) throw std::invalid_argument("vertex out of range");
  return std::gcd(i, n + 1) == 1;
}

// Closed form for cycle graphs: {i,j} drives C_n iff gcd(2*d(i,j), n) is 1
// or 2.
inline bool cycle_driver_predicate(int n, std::pair<int, int> pair) {
  if (n < 3) throw std::invalid_argument("cycle needs at least three vertices");
  auto [i, j] = pair;
  if (i < 1 || i > n || j < 1 || j > n) throw std::invalid_argument("vertex out of range");
  if (i == j) throw std::invalid_argument("pair vertices must differ");
  const int d = std::min(std::abs(i - j), n - std::abs(i - j));
  const int g = std::gcd(2 * d, n);
  return g == 1 || g == 2;
}

struct DriverOrbit {
  std::vector<int> representative;
  int size = 0;
  bool is_driver = false;
  std::vector<std::vector<int>> members;  // sorted lexicographically
};

struct DriverEnumeration {
  int d = 0;                              // minimum driver size
  long long n_d = 0;                      // count of minimum driver sets
  std::vector<std::vector<int>> sets;     // sorted lexicographically
  std::vector<DriverOrbit> orbits;        // all orbits of size-d subsets
};

struct EnumerationLimits {
  int max_vertices = 14;
  int max_subset_size = 4;
  int automorphism_cap = kAutomorphismSearchCap;
};

namespace detail {

inline std::vector<Permutation> group_or_trivial(const Graph& g, int automorphism_cap) {
  try {
    return automorphism_group(g, automorphism_cap);
  } catch (const capability_error&) {
    return {Permutation::identity(g.vertex_count())};
  }
}

}  // namespace detail

// Enumerates all minimum driver sets.  The search starts at the eigenvalue
// multiplicity lower bound and tests one representative per orbit; the
// verdict extends to the whole orbit by automorphism invariance.
inline DriverEnumeration enumerate_min_driver_sets(const Graph& g,
                                                   const EnumerationLimits& limits = {},
                                                   int jobs = 1) {
  const int n = g.vertex_count();
  if (n > limits.max_vertices)
    throw capability_error("driver enumeration capped at " +
                           std::to_string(limits.max_vertices) + " vertices (got " +
                           std::to_string(n) + "); raise the cap to override");
  const auto group = detail::group_or_trivial(g, limits.automorphism_cap);
  const ExactMatrix a = adjacency(g);
  const int start = std::max(1, max_multiplicity(g));
  for (int k = start; k <= std::min(n, limits.max_subset_size); ++k) {
    auto orbits = subset_orbits(g, k, group);
    auto verdicts = parallel_map(jobs, static_cast<int>(orbits.size()), [&](int i) {
      return kalman_controllable(
          a, input_matrix(orbits[static_cast<std::size_t>(i)].representative, n));
    });
    if (std::none_of(verdicts.begin(), verdicts.end(), [](bool v) { return v; })) continue;
    DriverEnumeration out;
    out.d = k;
    for (std::size_t i = 0; i < orbits.size(); ++i) {
      out.orbits.push_back(
          {orbits[i].representative, orbits[i].size(), verdicts[i], orbits[i].members});
      if (verdicts[i])
        out.sets.insert(out.sets.end(), orbits[i].members.begin(), orbits[i].members.end());
    }
    std::sort(out.sets.begin(), out.sets.end());
    out.n_d = static_cast<long long>(out.sets.size());
    return out;
  }
  throw capability_error("no driver set of size <= " +
                         std::to_string(limits.max_subset_size) +
                         " found; raise the subset-size cap to override");
}

}  // namespace driverset
