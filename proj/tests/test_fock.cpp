#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <random>

#include "clext/errors.hpp"
#include "clext/fock.hpp"
#include "test_support.hpp"

using namespace clext;

TEST(FockBuild, Errors) {
  auto p = AlgebraParams::from_free(3, {1.0, 0.0});
  EXPECT_THROW(build_fock(p, 10), InvalidParameters);
  EXPECT_THROW(build_fock(p, 0), InvalidParameters);
  EXPECT_THROW(build_fock(AlgebraParams::from_free(2, {-1.0}), 8), InvalidParameters);
  EXPECT_THROW(build_fock(AlgebraParams::from_free(3, {0.5, -3.0}), 9), InvalidParameters);
  auto rep = build_fock(p, 6);
  EXPECT_THROW(verify_defining_relations(rep), TruncationTooSmall);
  EXPECT_THROW(casimir_matrices(rep), TruncationTooSmall);
}

TEST(FockBuild, EntriesAreSquareRootsOfF) {
  std::mt19937_64 gen(31);
  for (int trial = 0; trial < 20; ++trial) {
    int lambda = 2 + trial % 5;
    auto p = oracle::random_admissible(gen, lambda);
    auto b = oracle::oracle_beta(p.alpha());
    auto rep = build_fock(p, 5 * lambda);
    for (int n = 0; n + 1 < rep.dim; ++n) {
      const int m = n + 1;
      EXPECT_NEAR(rep.a_dag(m, n).real(), std::sqrt(m + b[m % lambda]), 1e-13);
      EXPECT_EQ(rep.a_dag(m, n).imag(), 0.0);
    }
    EXPECT_NEAR((rep.a - rep.a_dag.adjoint()).cwiseAbs().maxCoeff(), 0.0, 0.0);
  }
}

TEST(FockRelations, HoldForRandomAdmissibleAlphas) {
  std::mt19937_64 gen(32);
  for (int trial = 0; trial < 30; ++trial) {
    int lambda = 2 + trial % 5;
    auto p = oracle::random_admissible(gen, lambda);
    auto rep = build_fock(p, 20 * lambda);
    auto rel = verify_defining_relations(rep);
    EXPECT_TRUE(rel.pass()) << "max residual " << rel.max_residual();
    auto cas = casimir_matrices(rep);
    EXPECT_TRUE(cas.report.pass()) << "max residual " << cas.report.max_residual();
    const int k = rep.interior();
    EXPECT_LE(oracle::max_abs(cas.c3, k), 1e-10);
  }
}

TEST(FockRelations, CommutatorDiagonalIsG) {
  auto p = AlgebraParams::from_free(4, {0.5, -0.25, 1.0});
  auto rep = build_fock(p, 24);
  Matrix c = rep.a * rep.a_dag - rep.a_dag * rep.a;
  for (int n = 0; n < rep.interior(); ++n) {
    EXPECT_NEAR(c(n, n).real(), 1.0 + p.alpha()[n % 4], 1e-12);
    for (int m = 0; m < rep.interior(); ++m)
      if (m != n) EXPECT_NEAR(std::abs(c(n, m)), 0.0, 1e-14);
  }
}

TEST(FockRelations, FaultInjectionIsDetected) {
  auto p = AlgebraParams::from_free(3, {1.0, 0.0});
  auto rep = build_fock(p, 30);
  auto bad = rep;
  bad.a_dag(5, 4) *= 1.001;
  auto r = verify_defining_relations(bad);
  EXPECT_FALSE(r.pass());
  EXPECT_FALSE(r.find("a = (a+)^dagger")->pass);

  auto bad_p = rep;
  bad_p.projectors[1](4, 4) = 0.5;
  EXPECT_FALSE(verify_defining_relations(bad_p).pass());

  auto bad_t = rep;
  bad_t.t_op(2, 2) *= std::polar(1.0, 1e-6);
  EXPECT_FALSE(verify_defining_relations(bad_t).find("T a+ = omega a+ T")->pass);
}

TEST(H0, ClosedFormMatchesEigenvalues) {
  std::mt19937_64 gen(33);
  for (int trial = 0; trial < 20; ++trial) {
    int lambda = 2 + trial % 5;
    auto p = oracle::random_admissible(gen, lambda);
    auto rep = build_fock(p, 10 * lambda);
    const int k = rep.interior();
    Eigen::SelfAdjointEigenSolver<Matrix> es(h0_anticommutator(rep).topLeftCorner(k, k));
    std::vector<double> closed;
    auto g = oracle::oracle_gamma(p.alpha());
    for (int n = 0; n < k; ++n) closed.push_back(n + g[n % lambda] + 0.5);
    std::sort(closed.begin(), closed.end());
    for (int i = 0; i < k; ++i) EXPECT_NEAR(es.eigenvalues()(i), closed[i], 1e-10);
    for (int n = 0; n < k; ++n) EXPECT_NEAR(h0_energy(p, n), n + g[n % lambda] + 0.5, 1e-12);
    EXPECT_TRUE(verify_h0(rep).pass());
  }
}

TEST(H0, ThreeGradeExamples) {
  auto p = AlgebraParams::from_free(3, {1.0, 0.0});
  const double want[] = {1.0, 2.5, 3.0, 4.0, 5.5, 6.0};
  for (int n = 0; n < 6; ++n) EXPECT_NEAR(h0_energy(p, n), want[n], 1e-14);

  auto q = AlgebraParams::from_free(3, {2.0, -1.0});
  const double want_q[] = {1.5, 3.0, 3.0, 4.5, 6.0, 6.0};
  for (int n = 0; n < 6; ++n) EXPECT_NEAR(h0_energy(q, n), want_q[n], 1e-14);
  auto levels = h0_spectrum(q, 1);
  ASSERT_GE(levels.size(), 6u);
  EXPECT_EQ(levels[1].degeneracy, 2);
  EXPECT_EQ(levels[1].level, levels[2].level);
}

TEST(Spectrum, ClassesAndSpacing) {
  auto levels = collect_levels([](long n) { return 2.0 * (n / 2); }, 2, 3);
  auto e = class_energies(levels);
  ASSERT_GE(e.size(), 4u);
  EXPECT_DOUBLE_EQ(e[1] - e[0], 2.0);
  EXPECT_TRUE(equally_spaced(levels));
  for (const auto& l : levels) EXPECT_EQ(l.degeneracy, 2);
  auto uneven = collect_levels([](long n) { return double(n * n); }, 2, 3);
  EXPECT_FALSE(equally_spaced(uneven));
}
