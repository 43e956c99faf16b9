#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "driverset/errors.hpp"
#include "driverset/graph.hpp"
#include "driverset/matrix.hpp"
#include "driverset/polynomial.hpp"

namespace driverset {

// Coefficient growth is super-polynomial in the dimension, so the exact
// characteristic polynomial is capped.
inline constexpr int kCharPolyDimensionCap = 24;

// det(lambda*I - m), monic, exact (Faddeev-LeVerrier recurrence).
inline UniPoly char_poly(const ExactMatrix& m, int dimension_cap = kCharPolyDimensionCap) {
  if (!m.is_square())
    throw std::invalid_argument("characteristic polynomial of non-square matrix");
  const int n = m.rows();
  if (n > dimension_cap)
    throw capability_error("char_poly: dimension " + std::to_string(n) +
                           " exceeds cap " + std::to_string(dimension_cap));
  std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
  coeffs[static_cast<std::size_t>(n)] = 1;
  if (n == 0) return UniPoly(std::move(coeffs));
  ExactMatrix work = ExactMatrix::identity(n);
  for (int k = 1; k <= n; ++k) {
    work = m * work;
    Rational c = -work.trace() / k;
    coeffs[static_cast<std::size_t>(n - k)] = c;
    if (k < n)
      for (int i = 0; i < n; ++i) work.at(i, i) += c;
  }
  return UniPoly(std::move(coeffs));
}

// Largest eigenvalue multiplicity of the adjacency matrix.  The adjacency
// matrix is symmetric, so geometric and algebraic multiplicities agree and
// the squarefree profile of the characteristic polynomial decides it.
inline int max_multiplicity(const Graph& g, int dimension_cap = kCharPolyDimensionCap) {
  auto profile = multiplicity_profile(char_poly(adjacency(g), dimension_cap));
  int m = 0;
  for (const auto& f : profile) m = std::max(m, f.multiplicity);
  return m;
}

}  // namespace driverset
