#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "clext/errors.hpp"
#include "clext/susy.hpp"
#include "test_support.hpp"

using namespace clext;

namespace {

double rel(const Matrix& lhs, const Matrix& rhs, int k) {
  const double scale = std::max({1.0, oracle::max_abs(lhs, k), oracle::max_abs(rhs, k)});
  return (lhs - rhs).topLeftCorner(k, k).cwiseAbs().maxCoeff() / scale;
}

// Q^2 = 0, [H,Q] = 0 and Q Q+ Q = 4 c^2 Q H evaluated directly.
void expect_pseudo_algebra(const PseudoRealization& real) {
  const int k = real.rep.interior();
  const Matrix& q = real.Q;
  const double c2 = real.params.c * real.params.c;
  EXPECT_LE(oracle::max_abs(q * q, k), 1e-10);
  EXPECT_GT(oracle::max_abs(q, k), 1e-3);
  EXPECT_LE(rel(real.H * q, q * real.H, k), 1e-10);
  EXPECT_LE(rel(q * q.adjoint() * q, 4.0 * c2 * q * real.H, k), 1e-10);
}

// alpha with alpha_{mu+1} = -1 that admits a Fock representation.
AlgebraParams ortho_alpha(std::mt19937_64& gen, int mu) {
  std::uniform_real_distribution<double> u(-0.9, 3.0);
  while (true) {
    std::vector<double> a(3);
    a[(mu + 1) % 3] = -1.0;
    a[mu % 3] = u(gen);
    a[(mu + 2) % 3] = -a[mu % 3] + 1.0;
    auto p = AlgebraParams::from_full(a);
    if (fock_exists(p)) return p;
  }
}

}  // namespace

TEST(Pseudo, FamilyOneSweep) {
  std::mt19937_64 gen(61);
  std::uniform_real_distribution<double> cu(0.3, 2.0), fr(0.05, 0.95), ph(-3.0, 3.0);
  for (int s = 0; s < 30; ++s) {
    auto params = oracle::random_admissible(gen, 3);
    PseudoParams pp;
    pp.family = PseudoFamily::One;
    pp.mu = s % 3;
    pp.c = (s % 2 ? -1.0 : 1.0) * cu(gen);
    pp.eta = 2.0 * std::abs(pp.c) * fr(gen);
    pp.phi = ph(gen);
    auto real = pseudo_build(build_fock(params, 30), pp);
    EXPECT_TRUE(pseudo_verify(real).pass());
    expect_pseudo_algebra(real);
    for (int n = 0; n < real.rep.interior(); ++n)
      EXPECT_NEAR(real.H(n, n).real(), pseudo_energy(params, pp, n), 1e-10);
  }
}

TEST(Pseudo, FamilyTwoSweep) {
  std::mt19937_64 gen(62);
  std::uniform_real_distribution<double> cu(0.3, 2.0), ru(-3.0, 6.0);
  for (int s = 0; s < 30; ++s) {
    auto params = oracle::random_admissible(gen, 3);
    PseudoParams pp;
    pp.family = PseudoFamily::Two;
    pp.mu = s % 3;
    pp.c = cu(gen);
    pp.r_mu = ru(gen);
    auto real = pseudo_build(build_fock(params, 30), pp);
    EXPECT_TRUE(pseudo_verify(real).pass());
    expect_pseudo_algebra(real);
    for (int n = 0; n < real.rep.interior(); ++n)
      EXPECT_NEAR(real.H(n, n).real(), pseudo_energy(params, pp, n), 1e-10) << "mu " << pp.mu << " n " << n;
  }
}

TEST(Pseudo, FamilyOneAtMidpointIsOrderTwoParasupersymmetry) {
  std::mt19937_64 gen(63);
  for (int s = 0; s < 12; ++s) {
    auto params = oracle::random_admissible(gen, 3);
    const int mu = s % 3;
    auto rep = build_fock(params, 30);
    PseudoParams pp;
    pp.mu = mu;
    pp.c = 0.5 + 0.25 * s;
    pp.eta = std::sqrt(2.0) * std::abs(pp.c);
    pp.phi = 0.0;
    auto pseudo = pseudo_build(rep, pp);
    auto para = pssqm_build(rep, mu);
    EXPECT_LE((pseudo.H - para.H).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Pseudo, FamilyTwoEqualSpacing) {
  std::mt19937_64 gen(64);
  for (int s = 0; s < 30; ++s) {
    auto params = oracle::random_admissible(gen, 3);
    PseudoParams pp;
    pp.family = PseudoFamily::Two;
    pp.mu = s % 3;
    pp.c = 1.0;
    pp.r_mu = family_two_equal_spacing_r(params, pp.mu);
    EXPECT_GE(pp.r_mu, 0.0);
    EXPECT_LT(pp.r_mu, 6.0);
    auto levels = pseudo_spectrum(params, pp, 4);
    EXPECT_TRUE(equally_spaced(levels)) << "mu " << pp.mu;
    pp.r_mu += 0.7;
    EXPECT_FALSE(equally_spaced(pseudo_spectrum(params, pp, 4)));
  }
}

TEST(Pseudo, Errors) {
  auto params = AlgebraParams::from_free(3, {0.5, 0.5});
  auto rep = build_fock(params, 30);
  PseudoParams pp;
  pp.c = 1.0;
  pp.eta = 2.0;
  EXPECT_THROW(pseudo_build(rep, pp), InvalidParameters);
  pp.eta = 0.0;
  EXPECT_THROW(pseudo_build(rep, pp), InvalidParameters);
  pp.eta = 1.0;
  pp.c = 0.0;
  EXPECT_THROW(pseudo_build(rep, pp), InvalidParameters);
  pp.c = 1.0;
  pp.mu = 3;
  EXPECT_THROW(pseudo_build(rep, pp), InvalidParameters);
  pp.mu = 0;
  EXPECT_THROW(pseudo_build(build_fock(AlgebraParams::from_free(2, {0.5}), 20), pp), InvalidParameters);
  EXPECT_THROW(pseudo_verify(pseudo_build(build_fock(params, 6), pp)), TruncationTooSmall);
}

TEST(Ortho, BrokenExample) {
  auto params = AlgebraParams::from_full({0.0, -1.0, 1.0});
  auto levels = ossqm_spectrum(params, 0, 2);
  ASSERT_FALSE(levels.empty());
  EXPECT_NEAR(levels[0].energy, 1.0, 1e-14);
  EXPECT_EQ(levels[0].degeneracy, 3);
  auto real = ossqm_build(build_fock(params, 30), 0, 1.0, 0.4);
  EXPECT_TRUE(ossqm_verify(real).pass());
  EXPECT_NEAR(real.H(0, 0).real(), 1.0, 1e-14);
  EXPECT_NEAR(real.H(1, 1).real(), 1.0, 1e-14);
  EXPECT_NEAR(real.H(2, 2).real(), 1.0, 1e-14);
}

TEST(Ortho, UnbrokenExample) {
  auto params = AlgebraParams::from_full({1.0, 0.0, -1.0});
  auto levels = ossqm_spectrum(params, 1, 2);
  EXPECT_NEAR(levels[0].energy, 0.0, 1e-14);
  EXPECT_EQ(levels[0].degeneracy, 1);
  auto real = ossqm_build(build_fock(params, 30), 1, std::sqrt(2.0), 0.0);
  EXPECT_TRUE(ossqm_verify(real).pass());
  // Both charges annihilate the ground state |0>.
  EXPECT_LE(real.Q1.col(0).norm() + real.Q2.col(0).norm(), 1e-14);
}

TEST(Ortho, RelationsByDirectEvaluation) {
  std::mt19937_64 gen(65);
  std::uniform_real_distribution<double> xu(0.05, std::sqrt(2.0)), ph(-3.0, 3.0);
  for (int s = 0; s < 20; ++s) {
    const int mu = s % 2;
    auto params = ortho_alpha(gen, mu);
    auto real = ossqm_build(build_fock(params, 30), mu, xu(gen), ph(gen));
    const int k = real.rep.interior();
    const Matrix* q[2] = {&real.Q1, &real.Q2};
    const Matrix sum = real.Q1.adjoint() * real.Q1 + real.Q2.adjoint() * real.Q2;
    for (int r = 0; r < 2; ++r) {
      EXPECT_LE(rel(real.H * *q[r], *q[r] * real.H, k), 1e-10);
      for (int t = 0; t < 2; ++t) {
        EXPECT_LE(oracle::max_abs(*q[r] * *q[t], k), 1e-10);
        Matrix lhs = *q[r] * q[t]->adjoint();
        if (r == t) lhs += sum;
        Matrix rhs = r == t ? Matrix(2.0 * real.H) : Matrix(Matrix::Zero(real.rep.dim, real.rep.dim));
        EXPECT_LE(rel(lhs, rhs, k), 1e-10) << "r " << r << " s " << t;
      }
    }
    for (int n = 0; n < k; ++n) EXPECT_NEAR(real.H(n, n).real(), ossqm_energy(params, mu, n), 1e-10);
  }
}

TEST(Ortho, HamiltonianIndependentOfXiAndPhi) {
  auto params = AlgebraParams::from_full({0.0, -1.0, 1.0});
  auto rep = build_fock(params, 30);
  auto ref = ossqm_build(rep, 0, std::sqrt(2.0), 0.0).H;
  for (double xi : {0.1, 0.7, 1.2, std::sqrt(2.0)})
    for (double phi : {-2.0, 0.0, 1.3})
      EXPECT_LE((ossqm_build(rep, 0, xi, phi).H - ref).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Ortho, Errors) {
  auto params = AlgebraParams::from_full({0.0, -1.0, 1.0});
  auto rep = build_fock(params, 30);
  EXPECT_THROW(ossqm_build(rep, 0, 0.0, 0.0), InvalidParameters);
  EXPECT_THROW(ossqm_build(rep, 0, 1.5, 0.0), InvalidParameters);
  EXPECT_THROW(ossqm_build(rep, 2, 1.0, 0.0), InvalidParameters);
  EXPECT_THROW(ossqm_build(rep, 1, 1.0, 0.0), NotApplicable);
  EXPECT_THROW(ossqm_build(build_fock(AlgebraParams::from_free(4, {0.0, -1.0, 1.0}), 40), 0, 1.0, 0.0),
               InvalidParameters);
}
