#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <random>
#include <set>
#include <tuple>

#include "clext/errors.hpp"
#include "clext/susy.hpp"
#include "test_support.hpp"

using namespace clext;

namespace {

using Key = std::tuple<std::vector<int>, int, std::vector<int>, int>;

Key key(const MixedRelation& m) { return {m.r_seq, m.s, m.t_seq, m.r}; }

ChargeSet charges(int p, int mu, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  auto params = oracle::random_admissible(gen, p + 1);
  return build_charge_set(build_fock(params, 6 * (p + 1)), mu);
}

Matrix word(const ChargeSet& cs, const std::vector<int>& rs, int s, int j) {
  const int dim = static_cast<int>(cs.H.rows());
  Matrix w = Matrix::Identity(dim, dim);
  for (int i = j; i < cs.p; ++i) w = w * cs.Q[rs[i] - 1];
  w = w * cs.Q[s - 1].adjoint();
  for (int i = 0; i < j; ++i) w = w * cs.Q[rs[i] - 1];
  return w;
}

}  // namespace

TEST(Charges, OrderTwoStructureConstantsAsListed) {
  EXPECT_EQ(charge_d(2, 1, 1, 2), 0.0);
  EXPECT_EQ(charge_d(2, 2, 2, 2), 0.0);
  EXPECT_EQ(charge_d(2, 1, 2, 2), -2.0);
  EXPECT_EQ(charge_d(2, 2, 1, 2), -2.0);
  EXPECT_EQ(charge_d(3, 1, 1, 2), -1.0);
  EXPECT_EQ(charge_d(3, 1, 2, 2), 1.0);
  EXPECT_EQ(charge_d(3, 2, 1, 2), 1.0);
  EXPECT_EQ(charge_d(3, 2, 2, 2), -1.0);
  for (int r = 1; r <= 2; ++r)
    for (int s = 1; s <= 2; ++s) EXPECT_EQ(charge_d(1, r, s, 2), 0.0);
}

TEST(Charges, SignMatrixInverse) {
  for (int p = 1; p <= 7; ++p)
    for (int nu = 1; nu <= p; ++nu)
      for (int nu2 = 1; nu2 <= p; ++nu2) {
        double acc = 0.0;
        for (int r = 1; r <= p; ++r) acc += charge_b_inverse(nu, r, p) * charge_b(r, nu2);
        EXPECT_NEAR(acc, nu == nu2 ? 1.0 : 0.0, 1e-15) << "p " << p;
      }
}

TEST(Charges, StructureConstantsMatchLeastSquaresFit) {
  for (int p = 2; p <= 4; ++p) {
    auto cs = charges(p, 1 % (p + 1), 51 + p);
    const int k = cs.interior;
    Eigen::MatrixXcd basis(k * k, p);
    for (int s = 1; s <= p; ++s) {
      Matrix b = cs.Q[s - 1].topLeftCorner(k, k);
      basis.col(s - 1) = Eigen::Map<Eigen::VectorXcd>(b.data(), k * k);
    }
    for (int t = 1; t <= p + 1; ++t)
      for (int r = 1; r <= p; ++r) {
        Matrix c = (cs.I[t - 1] * cs.Q[r - 1] - cs.Q[r - 1] * cs.I[t - 1]).topLeftCorner(k, k);
        Eigen::VectorXcd v = Eigen::Map<Eigen::VectorXcd>(c.data(), k * k);
        Eigen::VectorXcd x = basis.colPivHouseholderQr().solve(v);
        EXPECT_LE((basis * x - v).norm(), 1e-10);
        for (int s = 1; s <= p; ++s) {
          EXPECT_NEAR(x(s - 1).real(), charge_d(t, r, s, p), 1e-10) << "p " << p << " t " << t << " r " << r;
          EXPECT_NEAR(x(s - 1).imag(), 0.0, 1e-10);
        }
      }
  }
}

TEST(Charges, VerifiedForEveryOrderAndGrade) {
  for (int p = 1; p <= 5; ++p)
    for (int mu = 0; mu <= p; ++mu) {
      auto cs = charges(p, mu, 60 + 10 * p + mu);
      auto r = verify_charge_set(cs);
      EXPECT_TRUE(r.pass()) << "p " << p << " mu " << mu << " max " << r.max_residual();
    }
}

TEST(Charges, Errors) {
  auto params = AlgebraParams::from_free(3, {0.5, 0.5});
  EXPECT_THROW(build_charge_set(build_fock(params, 6), 0), TruncationTooSmall);
  EXPECT_THROW(build_charge_set(build_fock(params, 30), 3), InvalidParameters);
  EXPECT_THROW(select_mixed_tuples(0), InvalidParameters);
}

TEST(Charges, FaultInjectionIsDetected) {
  auto cs = charges(2, 0, 70);
  cs.I[2](3, 3) *= -1.0;
  EXPECT_FALSE(verify_charge_set(cs).pass());
}

TEST(MixedRelations, SelectionEqualsExhaustiveSearch) {
  for (int p = 2; p <= 3; ++p) {
    auto cs = charges(p, 0, 80 + p);
    auto brute = brute_force_mixed_tuples(cs);
    auto sel = select_mixed_tuples(p, false);
    std::set<Key> a, b;
    for (const auto& m : brute) a.insert(key(m));
    for (const auto& m : sel) b.insert(key(m));
    EXPECT_EQ(a.size(), brute.size());
    EXPECT_FALSE(a.empty());
    EXPECT_EQ(a, b) << "p " << p;

    std::set<Key> ca, cb;
    for (auto m : brute) {
      for (int j = 0; j <= p; ++j) m.t_seq[j] = canonical_t(p, j, m.t_seq[j]);
      ca.insert(key(m));
    }
    for (const auto& m : select_mixed_tuples(p, true)) cb.insert(key(m));
    EXPECT_EQ(ca, cb) << "p " << p;
  }
}

TEST(MixedRelations, SelectionIndependentOfGradeAndAlpha) {
  auto sel = select_mixed_tuples(2, false);
  std::set<Key> want;
  for (const auto& m : sel) want.insert(key(m));
  for (int mu = 0; mu <= 2; ++mu) {
    std::set<Key> got;
    for (const auto& m : brute_force_mixed_tuples(charges(2, mu, 90 + mu))) got.insert(key(m));
    EXPECT_EQ(got, want) << "mu " << mu;
  }
}

TEST(MixedRelations, CanonicalIndexActsLikeTheOriginal) {
  for (int p = 2; p <= 3; ++p) {
    auto cs = charges(p, 1, 100 + p);
    const int k = cs.interior;
    std::vector<int> rs(p, 1);
    while (true) {
      for (int s = 1; s <= p; ++s)
        for (int j = 0; j <= p; ++j) {
          Matrix w = word(cs, rs, s, j);
          for (int t = 1; t <= p + 1; ++t) {
            Matrix d = (cs.I[t - 1] - cs.I[canonical_t(p, j, t) - 1]) * w;
            EXPECT_LE(oracle::max_abs(d, k), 1e-10) << "p " << p << " term " << j << " t " << t;
          }
        }
      int i = 0;
      while (i < p && ++rs[i] > p) rs[i++] = 1;
      if (i == p) break;
    }
  }
}

TEST(MixedRelations, OrderTwoGivesTheSixListedRelations) {
  std::set<Key> want;
  for (auto [r, s] : {std::pair{1, 2}, std::pair{2, 1}}) {
    // I3 Q_s^2 Q_r+ + Q_s Q_r+ Q_s + I2 Q_r+ Q_s^2 = 4 Q_r H
    want.insert(Key{{s, s}, r, {3, 1, 2}, r});
    // Q_r Q_s Q_s+ + Q_s Q_s+ Q_r + I2 Q_s+ Q_r Q_s = 4 Q_r H
    want.insert(Key{{r, s}, s, {1, 1, 2}, r});
    // I3 Q_s Q_r Q_s+ + Q_r Q_s+ Q_s + Q_s+ Q_s Q_r = 4 Q_r H
    want.insert(Key{{s, r}, s, {3, 1, 1}, r});
  }
  for (int mu = 0; mu <= 2; ++mu) {
    auto cs = charges(2, mu, 110 + mu);
    auto rels = find_mixed_relations(cs);
    ASSERT_EQ(rels.size(), 6u);
    std::set<Key> got;
    for (const auto& m : rels) {
      got.insert(key(m));
      EXPECT_TRUE(m.pass) << m.text();
      EXPECT_LE(relation_residual(mixed_lhs(cs, m), mixed_rhs(cs, m), cs.interior), 1e-9);
    }
    EXPECT_EQ(got, want);
  }
}

TEST(MixedRelations, OrderOneKeepsTheSingleRelation) {
  auto cs = charges(1, 0, 120);
  auto rels = find_mixed_relations(cs);
  ASSERT_EQ(rels.size(), 1u);
  EXPECT_EQ(key(rels[0]), (Key{{1}, 1, {1, 1}, 1}));
  EXPECT_TRUE(rels[0].pass);
  EXPECT_EQ(rels[0].text(), "Q1 Q1^+ + Q1^+ Q1 = 2 H");
}

TEST(MixedRelations, OrderThreeRelationsHold) {
  auto cs = charges(3, 2, 130);
  auto rels = find_mixed_relations(cs);
  EXPECT_FALSE(rels.empty());
  for (const auto& m : rels) EXPECT_TRUE(m.pass) << m.text() << " residual " << m.residual;
  std::cout << "[ info ] order-3 independent mixed relations: " << rels.size() << "\n";
}

TEST(MixedRelations, RelationText) {
  MixedRelation m{{2, 2}, 1, {3, 1, 2}, 1, 0.0, true};
  EXPECT_EQ(m.text(), "I3 Q2 Q2 Q1^+ + Q2 Q1^+ Q2 + I2 Q1^+ Q2 Q2 = 4 Q1 H");
}
