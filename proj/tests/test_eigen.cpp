#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "test_util.hpp"

using namespace driverset;

namespace {

std::vector<double> cluster_values(const EigenDecomposition& dec) {
  std::vector<double> out;
  for (const auto& c : dec.clusters) out.push_back(c.value);
  return out;
}

std::vector<int> cluster_mults(const EigenDecomposition& dec) {
  std::vector<int> out;
  for (const auto& c : dec.clusters) out.push_back(c.multiplicity);
  return out;
}

}  // namespace

TEST(EigenSymTest, PathFiveSpectrum) {
  const auto dec = eigen_sym(adjacency(path_graph(5)));
  const double r3 = std::sqrt(3.0);
  const std::vector<double> expected{-r3, -1.0, 0.0, 1.0, r3};
  ASSERT_EQ(dec.clusters.size(), 5u);
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_NEAR(dec.clusters[i].value, expected[i], 1e-10);
    EXPECT_EQ(dec.clusters[i].multiplicity, 1);
  }
}

TEST(EigenSymTest, CycleSixSpectrum) {
  const auto dec = eigen_sym(adjacency(cycle_graph(6)));
  EXPECT_EQ(cluster_mults(dec), (std::vector<int>{1, 2, 2, 1}));
  const std::vector<double> values = cluster_values(dec);
  EXPECT_NEAR(values[0], -2.0, 1e-10);
  EXPECT_NEAR(values[1], -1.0, 1e-10);
  EXPECT_NEAR(values[2], 1.0, 1e-10);
  EXPECT_NEAR(values[3], 2.0, 1e-10);
}

TEST(EigenSymTest, IdentityFourSingleCluster) {
  const auto dec = eigen_sym(ExactMatrix::identity(4));
  ASSERT_EQ(dec.clusters.size(), 1u);
  EXPECT_NEAR(dec.clusters[0].value, 1.0, 1e-12);
  EXPECT_EQ(dec.clusters[0].multiplicity, 4);
}

TEST(EigenSymTest, NonSymmetricThrows) {
  ExactMatrix m(2, 2);
  m.at(0, 1) = 1;
  EXPECT_THROW(eigen_sym(m), std::invalid_argument);
}

TEST(EigenSymTest, ReconstructionAndResiduals) {
  for (std::uint64_t seed = 50; seed < 58; ++seed) {
    const Graph g = testutil::random_graph(seed);
    const ExactMatrix a = adjacency(g);
    const RealMatrix ar = to_real(a);
    const int n = a.rows();
    const auto dec = eigen_sym(a);
    int total_mult = 0;
    // Q Lambda Q^T reconstruction error below 1e-9 and per-column residuals
    // below 1e-8.
    RealMatrix rebuilt(n, n);
    for (const auto& cluster : dec.clusters) {
      total_mult += cluster.multiplicity;
      for (int c = 0; c < cluster.multiplicity; ++c) {
        double residual = 0;
        for (int i = 0; i < n; ++i) {
          double av = 0;
          for (int j = 0; j < n; ++j) av += ar.at(i, j) * cluster.basis.at(j, c);
          residual = std::max(residual, std::fabs(av - cluster.value * cluster.basis.at(i, c)));
        }
        EXPECT_LT(residual, 1e-8);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            rebuilt.at(i, j) += cluster.value * cluster.basis.at(i, c) * cluster.basis.at(j, c);
      }
      // Orthonormal columns.
      for (int c1 = 0; c1 < cluster.multiplicity; ++c1)
        for (int c2 = c1; c2 < cluster.multiplicity; ++c2) {
          double dot = 0;
          for (int i = 0; i < n; ++i) dot += cluster.basis.at(i, c1) * cluster.basis.at(i, c2);
          EXPECT_NEAR(dot, c1 == c2 ? 1.0 : 0.0, 1e-10);
        }
    }
    EXPECT_EQ(total_mult, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) EXPECT_NEAR(rebuilt.at(i, j), ar.at(i, j), 1e-9);
  }
}

TEST(PluckerTest, CycleSixAntipodalPairVanishes) {
  const auto dec = eigen_sym(adjacency(cycle_graph(6)));
  // Clusters are sorted: index 2 is the two-dimensional eigenspace at +1.
  const auto& e_plus = dec.clusters[2];
  ASSERT_EQ(e_plus.multiplicity, 2);
  EXPECT_NEAR(plucker(e_plus.basis, {1, 4}), 0.0, 1e-10);
}

TEST(PluckerTest, CycleSixNearPairsNonzero) {
  const auto dec = eigen_sym(adjacency(cycle_graph(6)));
  const Graph g = cycle_graph(6);
  for (const auto& cluster : {dec.clusters[1], dec.clusters[2]}) {
    ASSERT_EQ(cluster.multiplicity, 2);
    for (int i = 1; i <= 6; ++i)
      for (int j = i + 1; j <= 6; ++j) {
        const double minor = plucker(cluster.basis, {i, j});
        if (distance(g, i, j) <= 2)
          EXPECT_GT(std::fabs(minor), 1e-6);
        else
          EXPECT_NEAR(minor, 0.0, 1e-10);
      }
  }
}

TEST(PluckerTest, IdentityBlockRows) {
  RealMatrix basis(4, 2);
  basis.at(1, 0) = 1.0;
  basis.at(3, 1) = 1.0;
  basis.at(0, 0) = 0.25;  // noise outside the selected rows
  EXPECT_NEAR(plucker(basis, {2, 4}), 1.0, 1e-12);
}

TEST(PluckerTest, SizeMismatchThrows) {
  RealMatrix basis(4, 2);
  EXPECT_THROW(plucker(basis, {1, 2, 3}), std::invalid_argument);
  EXPECT_THROW(plucker(basis, {1, 5}), std::invalid_argument);
}

TEST(PluckerTest, BasisChangeScalesAllMinorsJointly) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 5, m = 2;
    RealMatrix basis(n, m);
    for (double& v : basis.data) v = static_cast<double>(static_cast<int>(rng() % 19) - 9) / 4.0;
    RealMatrix t(m, m);
    do {
      for (double& v : t.data) v = static_cast<double>(static_cast<int>(rng() % 19) - 9) / 4.0;
    } while (std::fabs(t.at(0, 0) * t.at(1, 1) - t.at(0, 1) * t.at(1, 0)) < 1e-9);
    const double det_t = t.at(0, 0) * t.at(1, 1) - t.at(0, 1) * t.at(1, 0);
    RealMatrix changed(n, m);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < m; ++j)
        changed.at(i, j) = basis.at(i, 0) * t.at(0, j) + basis.at(i, 1) * t.at(1, j);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        const double before = plucker(basis, {i, j});
        const double after = plucker(changed, {i, j});
        EXPECT_NEAR(after, det_t * before, 1e-8);
      }
  }
}

TEST(PbhEigenspaceTest, WorkedExamples) {
  EXPECT_TRUE(pbh_eigenspace_check(path_graph(5), {1}));
  EXPECT_FALSE(pbh_eigenspace_check(cycle_graph(6), {1, 4}));
  EXPECT_FALSE(pbh_eigenspace_check(path_graph(5), {3}));
}

TEST(PbhEigenspaceTest, AgreesWithExactOracleOnRandomGraphs) {
  // Smaller edition of the acceptance agreement suite.
  for (std::uint64_t seed = 70; seed < 110; ++seed) {
    const Graph g = testutil::random_graph(seed);
    const ExactMatrix a = adjacency(g);
    const int n = g.vertex_count();
    for (int k = 1; k <= std::min(3, n); ++k)
      for (const auto& s : testutil::all_subsets_of_size(n, k)) {
        const bool exact = kalman_controllable(a, input_matrix(s, n));
        EXPECT_EQ(pbh_eigenspace_check(g, s, 1e-7), exact)
            << "seed " << seed << " subset size " << k;
      }
  }
}
