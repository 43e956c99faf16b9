#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "driverset/graph.hpp"
#include "driverset/matrix.hpp"

namespace driverset {

struct RealMatrix {
  int rows = 0, cols = 0;
  std::vector<double> data;

  RealMatrix() = default;
  RealMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0.0) {}

  double& at(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
  double at(int i, int j) const { return data[static_cast<std::size_t>(i) * cols + j]; }

  double frobenius() const {
    double s = 0;
    for (double v : data) s += v * v;
    return std::sqrt(s);
  }
};

inline RealMatrix to_real(const ExactMatrix& m) {
  RealMatrix out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j).get_d();
  return out;
}

struct EigenCluster {
  double value = 0.0;   // mean of the clustered eigenvalue estimates
  int multiplicity = 0;
  RealMatrix basis;     // n x multiplicity, orthonormal columns
};

struct EigenDecomposition {
  std::vector<EigenCluster> clusters;  // ascending by value
  double tolerance = 0.0;
};

inline constexpr double kDefaultClusterTolerance = 1e-6;
inline constexpr double kDefaultZeroTolerance = 1e-7;

namespace detail {

// Cyclic Jacobi sweeps; diagonalizes a in place and accumulates the
// rotations in q (columns end up as eigenvectors).
inline void jacobi_sweeps(RealMatrix& a, RealMatrix& q) {
  const int n = a.rows;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) q.at(i, j) = (i == j) ? 1.0 : 0.0;
  for (int sweep = 0; sweep < 128; ++sweep) {
    double off = 0, diag = 0;
    for (int p = 0; p < n; ++p) {
      diag += a.at(p, p) * a.at(p, p);
      for (int r = p + 1; r < n; ++r) off += a.at(p, r) * a.at(p, r);
    }
    if (off <= 1e-28 * (diag + off) + 1e-300) break;
    for (int p = 0; p < n; ++p) {
      for (int r = p + 1; r < n; ++r) {
        if (std::fabs(a.at(p, r)) <= 1e-300) continue;
        const double theta = (a.at(r, r) - a.at(p, p)) / (2.0 * a.at(p, r));
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);
        const double apr = a.at(p, r);
        a.at(p, p) -= t * apr;
        a.at(r, r) += t * apr;
        a.at(p, r) = 0.0;
        a.at(r, p) = 0.0;
        for (int k = 0; k < n; ++k) {
          const double qkp = q.at(k, p), qkr = q.at(k, r);
          q.at(k, p) = qkp - s * (qkr + tau * qkp);
          q.at(k, r) = qkr + s * (qkp - tau * qkr);
          if (k == p || k == r) continue;
          const double akp = a.at(k, p), akr = a.at(k, r);
          a.at(k, p) = a.at(p, k) = akp - s * (akr + tau * akp);
          a.at(k, r) = a.at(r, k) = akr + s * (akp - tau * akr);
        }
      }
    }
  }
}

}  // namespace detail

// Symmetric eigendecomposition with greedy eigenvalue clustering: sorted
// eigenvalues start a new cluster whenever the gap exceeds cluster_tol.
// The returned bases are orthonormal (columns of the accumulated rotation).
inline EigenDecomposition eigen_sym(const ExactMatrix& m,
                                    double cluster_tol = kDefaultClusterTolerance) {
  if (!m.is_symmetric()) throw std::invalid_argument("eigen_sym needs a symmetric matrix");
  const int n = m.rows();
  RealMatrix a = to_real(m);
  RealMatrix q(n, n);
  detail::jacobi_sweeps(a, q);

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return a.at(i, i) < a.at(j, j); });

  EigenDecomposition dec;
  dec.tolerance = cluster_tol;
  int start = 0;
  while (start < n) {
    int stop = start + 1;
    while (stop < n &&
           a.at(order[static_cast<std::size_t>(stop)], order[static_cast<std::size_t>(stop)]) -
                   a.at(order[static_cast<std::size_t>(stop - 1)],
                        order[static_cast<std::size_t>(stop - 1)]) <=
               cluster_tol)
      ++stop;
    EigenCluster cluster;
    cluster.multiplicity = stop - start;
    cluster.basis = RealMatrix(n, cluster.multiplicity);
    double sum = 0;
    for (int c = start; c < stop; ++c) {
      const int col = order[static_cast<std::size_t>(c)];
      sum += a.at(col, col);
      for (int i = 0; i < n; ++i) cluster.basis.at(i, c - start) = q.at(i, col);
    }
    cluster.value = sum / cluster.multiplicity;
    dec.clusters.push_back(std::move(cluster));
    start = stop;
  }
  return dec;
}

namespace detail {

inline double gauss_det(RealMatrix m) {
  const int n = m.rows;
  double det = 1.0;
  for (int k = 0; k < n; ++k) {
    int pivot = k;
    for (int i = k + 1; i < n; ++i)
      if (std::fabs(m.at(i, k)) > std::fabs(m.at(pivot, k))) pivot = i;
    if (m.at(pivot, k) == 0.0) return 0.0;
    if (pivot != k) {
      for (int j = k; j < n; ++j) std::swap(m.at(pivot, j), m.at(k, j));
      det = -det;
    }
    det *= m.at(k, k);
    for (int i = k + 1; i < n; ++i) {
      const double f = m.at(i, k) / m.at(k, k);
      for (int j = k; j < n; ++j) m.at(i, j) -= f * m.at(k, j);
    }
  }
  return det;
}

// Numerical row-space rank through the singular values of r (eigenvalues of
// r^T r); the zero threshold is scaled by the Frobenius norm.
inline int numeric_rank(const RealMatrix& r, double tol) {
  const int m = r.cols;
  if (m == 0) return 0;
  RealMatrix gram(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      double s = 0;
      for (int k = 0; k < r.rows; ++k) s += r.at(k, i) * r.at(k, j);
      gram.at(i, j) = s;
    }
  RealMatrix q(m, m);
  jacobi_sweeps(gram, q);
  const double threshold = tol * std::max(1.0, r.frobenius());
  int rank = 0;
  for (int i = 0; i < m; ++i)
    if (std::sqrt(std::max(0.0, gram.at(i, i))) > threshold) ++rank;
  return rank;
}

}  // namespace detail

// Maximal minor of the basis restricted to the rows in s (1-based).  Only
// meaningful up to a joint nonzero factor across all row choices.
inline double plucker(const RealMatrix& basis, const std::vector<int>& s) {
  if (static_cast<int>(s.size()) != basis.cols)
    throw std::invalid_argument("plucker: row set size must match basis width");
  RealMatrix sub(basis.cols, basis.cols);
  for (int i = 0; i < static_cast<int>(s.size()); ++i) {
    if (s[static_cast<std::size_t>(i)] < 1 || s[static_cast<std::size_t>(i)] > basis.rows)
      throw std::invalid_argument("plucker: row index out of range");
    for (int j = 0; j < basis.cols; ++j)
      sub.at(i, j) = basis.at(s[static_cast<std::size_t>(i)] - 1, j);
  }
  return detail::gauss_det(std::move(sub));
}

// Numerical eigenspace test: every eigenspace cluster must keep full rank
// after restriction to the rows of s.  Advisory only; the exact engine is
// the decision authority.
inline bool pbh_eigenspace_check(const Graph& g, const std::vector<int>& s,
                                 double tol = kDefaultZeroTolerance) {
  for (int v : s) g.check_vertex(v);
  const EigenDecomposition dec = eigen_sym(adjacency(g));
  for (const EigenCluster& cluster : dec.clusters) {
    RealMatrix rows(static_cast<int>(s.size()), cluster.multiplicity);
    for (int i = 0; i < static_cast<int>(s.size()); ++i)
      for (int j = 0; j < cluster.multiplicity; ++j)
        rows.at(i, j) = cluster.basis.at(s[static_cast<std::size_t>(i)] - 1, j);
    if (detail::numeric_rank(rows, tol) != cluster.multiplicity) return false;
  }
  return true;
}

}  // namespace driverset
