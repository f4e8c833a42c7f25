#include <gtest/gtest.h>

#include "qs/error.hpp"
#include "qs/random.hpp"
#include "qs/repn.hpp"
#include "support/helpers.hpp"
#include "support/oracles.hpp"

using namespace qs;
using testing_support::make_quiver;
using testing_support::qm;
using testing_support::three_chain;
using testing_support::ts;

namespace {

QuiverPtr a2() { return make_quiver("quiver { vertex p mult 1 vertex q mult 1 arrow x : p -> q }"); }
QuiverPtr a2_mult() { return make_quiver("quiver { vertex p mult 1 vertex q mult 2 arrow x : p -> q }"); }

Representation a2_example() {
  return Representation(a2(), {1, 1}, {RMap({1, 1}, {1, 1}, 1, qm(1, 1, {2})), RMap({1, 1}, {1, 1}, 1, qm(1, 1, {3}))});
}

// mu_i from the definition: sum over arrows into i of sgn(h) sum_k N^k B_h B_hbar N^(f_h-1-k)
std::vector<QMatrix> moment_oracle(const Representation& rep) {
  const QuiverMult& q = rep.quiver();
  DoubleQuiver h(q);
  std::vector<QMatrix> out;
  for (std::size_t i = 0; i < q.vertex_count(); ++i) {
    const auto n = static_cast<std::size_t>(rep.dims()[i]);
    const auto d = static_cast<std::size_t>(q.mult(i));
    QMatrix acc(n * d, n * d);
    const QMatrix nn = oracle::eps(n, d);
    for (std::size_t a = 0; a < h.size(); ++a) {
      if (h[a].target != i) continue;
      const QMatrix z = rep.map(a).flat() * rep.map(h.bar(a)).flat();
      const int f = h[a].f;
      QMatrix term(n * d, n * d);
      for (int k = 0; k < f; ++k) term += power(nn, static_cast<unsigned>(k)) * z * power(nn, static_cast<unsigned>(f - 1 - k));
      acc += GaussQ(h[a].sign) * term;
    }
    out.push_back(acc);
  }
  return out;
}

std::vector<QuiverPtr> sample_quivers() {
  return {a2(), a2_mult(), three_chain(1, 2), three_chain(3, 3),
          make_quiver("quiver { vertex a mult 2 vertex b mult 3 vertex c mult 6 arrow x : a -> c arrow y : b -> c arrow z : a -> b }")};
}

DimVector random_dims(SplitMix64& rng, const QuiverMult& q) {
  DimVector v;
  for (std::size_t i = 0; i < q.vertex_count(); ++i) v.push_back(rng.uniform(0, 2));
  return v;
}

}  // namespace

TEST(Representation, ValidatesShapes) {
  EXPECT_THROW(Representation(a2(), {1, 1}, {RMap({1, 1}, {1, 1}, 1, qm(1, 1, {2}))}), Error);
  EXPECT_THROW(Representation(a2(), {1, 2}, {RMap({1, 1}, {1, 1}, 1, qm(1, 1, {2})), RMap({1, 1}, {1, 1}, 1, qm(1, 1, {3}))}),
               Error);
  EXPECT_THROW(Representation::zero(a2(), {1, -1}), Error);
}

TEST(Moment, Examples) {
  Representation z = Representation::zero(three_chain(1, 2), {1, 2, 1});
  for (const auto& m : moment_map(z)) EXPECT_TRUE(m.flat().is_zero());

  MomentValue mu = moment_map(a2_example());
  EXPECT_EQ(mu[0], REnd::scalar(1, ts({-6})));
  EXPECT_EQ(mu[1], REnd::scalar(1, ts({6})));

  Representation b(a2_mult(), {1, 1}, {RMap({1, 1}, {1, 2}, 1, qm(2, 1, {1, 2})), RMap({1, 2}, {1, 1}, 1, qm(1, 2, {3, 4}))});
  MomentValue mb = moment_map(b);
  EXPECT_EQ(mb[0], REnd::scalar(1, ts({-11})));
  EXPECT_EQ(mb[1], REnd::scalar(1, ts({4, 11})));
  EXPECT_TRUE(perpendicularity_defect(mb).is_zero());
}

TEST(Moment, MeshAndLevelExamples) {
  Representation z = Representation::zero(a2(), {1, 1});
  EXPECT_TRUE(in_level_set(z, {ts({0}), ts({0})}));
  EXPECT_TRUE(in_level_set(a2_example(), {ts({6}), ts({-6})}));
  EXPECT_FALSE(in_level_set(a2_example(), {ts({6}), ts({-5})}));
  QuiverPtr q = a2();
  EXPECT_TRUE(level_check(*q, {ts({0}), ts({0})}, {3, 2}));
  EXPECT_TRUE(level_check(*q, {ts({4}), ts({7})}, {0, 0}));
  EXPECT_TRUE(level_check(*q, {ts({6}), ts({-6})}, {1, 1}));
  EXPECT_FALSE(level_check(*q, {ts({6}), ts({-5})}, {1, 1}));
  // a parameter violating the level condition admits no point: every rep has nonzero residual
  SplitMix64 rng(4);
  for (int t = 0; t < 10; ++t) {
    Representation rep = random_rep(q, {1, 1}, rng);
    EXPECT_FALSE(is_zero(mesh_check(rep, {ts({6}), ts({-5})})));
  }
}

TEST(Moment, MatchesDefinitionOnRandomData) {
  SplitMix64 rng(31);
  for (const auto& q : sample_quivers()) {
    for (int t = 0; t < 10; ++t) {
      Representation rep = random_rep(q, random_dims(rng, *q), rng);
      MomentValue mu = moment_map(rep);
      std::vector<QMatrix> expected = moment_oracle(rep);
      for (std::size_t i = 0; i < mu.size(); ++i) {
        EXPECT_EQ(mu[i].flat(), expected[i]);
        EXPECT_TRUE(mu[i].is_endomorphism());
      }
      EXPECT_TRUE(perpendicularity_defect(mu).is_zero());
    }
  }
}

TEST(Symplectic, Examples) {
  QuiverPtr q = a2();
  Representation t1(q, {1, 1}, {RMap({1, 1}, {1, 1}, 1, qm(1, 1, {5})), RMap::zero({1, 1}, {1, 1}, 1)});
  Representation t2(q, {1, 1}, {RMap::zero({1, 1}, {1, 1}, 1), RMap({1, 1}, {1, 1}, 1, qm(1, 1, {7}))});
  EXPECT_EQ(symplectic_form(t1, t2), GaussQ(35));
  EXPECT_EQ(symplectic_form(t2, t1), GaussQ(-35));
  EXPECT_EQ(symplectic_form(t1, t1), GaussQ(0));
}

TEST(SymplecticProperty, AntisymmetricAndAgreesWithDoubledForm) {
  SplitMix64 rng(32);
  for (const auto& q : sample_quivers()) {
    for (int t = 0; t < 5; ++t) {
      DimVector v = random_dims(rng, *q);
      Representation a = random_rep(q, v, rng);
      Representation b = random_rep(q, v, rng);
      EXPECT_EQ(symplectic_form(a, b), -symplectic_form(b, a));
      EXPECT_TRUE(symplectic_form(a, a).is_zero());
      EXPECT_EQ(symplectic_form(a, b), symplectic_form_doubled(a, b));
    }
  }
}

TEST(Hamiltonian, Examples) {
  QuiverPtr q = a2();
  Representation b = a2_example();
  SplitMix64 rng(33);
  MomentValue xi = random_lie_element(*q, {1, 1}, rng);
  HamiltonianCheck zero = moment_derivative_check(b, Representation::zero(q, {1, 1}), xi);
  EXPECT_TRUE(zero.lhs.is_zero());
  EXPECT_TRUE(zero.rhs.is_zero());
  Representation delta = random_rep(q, {1, 1}, rng);
  MomentValue central{REnd::scalar(1, ts({2})), REnd::scalar(1, ts({2}))};
  HamiltonianCheck c = moment_derivative_check(b, delta, central);
  EXPECT_TRUE(c.holds());
  EXPECT_TRUE(moment_derivative_check(b, delta, xi).holds());
}

TEST(HamiltonianProperty, DerivativePairsWithSymplecticForm) {
  SplitMix64 rng(34);
  for (const auto& q : sample_quivers()) {
    for (int t = 0; t < 8; ++t) {
      DimVector v = random_dims(rng, *q);
      Representation b = random_rep(q, v, rng);
      Representation delta = random_rep(q, v, rng);
      MomentValue xi = random_lie_element(*q, v, rng);
      HamiltonianCheck h = moment_derivative_check(b, delta, xi);
      EXPECT_TRUE(h.holds());
      // second route: the quadratic map mu has derivative mu(B + delta) - mu(B) - mu(delta) at B
      MomentValue m1 = moment_map(b + delta);
      MomentValue m0 = moment_map(b);
      MomentValue m2 = moment_map(delta);
      MomentValue diff;
      for (std::size_t i = 0; i < m1.size(); ++i) diff.push_back(m1[i] - m0[i] - m2[i]);
      EXPECT_EQ(moment_pairing(diff, xi), h.lhs);
      EXPECT_EQ(symplectic_form(infinitesimal_action(b, xi), delta), h.rhs);
    }
  }
}

TEST(Gauge, Examples) {
  Representation b = a2_example();
  EXPECT_EQ(gauge(b, {REnd::identity(1, 1), REnd::identity(1, 1)}), b);
  SplitMix64 rng(35);
  for (const auto& q : sample_quivers()) {
    DimVector v = random_dims(rng, *q);
    Representation rep = random_rep(q, v, rng);
    std::vector<REnd> scalar;
    for (std::size_t i = 0; i < v.size(); ++i) {
      scalar.push_back(REnd::scalar(static_cast<std::size_t>(v[i]), TruncScalar::constant(q->mult(i), GaussQ(-3))));
    }
    EXPECT_EQ(gauge(rep, scalar), rep);
  }
}

TEST(GaugeProperty, MomentMapIsEquivariant) {
  SplitMix64 rng(36);
  for (const auto& q : sample_quivers()) {
    for (int t = 0; t < 8; ++t) {
      DimVector v = random_dims(rng, *q);
      Representation rep = random_rep(q, v, rng);
      std::vector<REnd> g = random_group_element(*q, v, rng);
      MomentValue lhs = moment_map(gauge(rep, g));
      MomentValue mu = moment_map(rep);
      for (std::size_t i = 0; i < mu.size(); ++i) EXPECT_EQ(lhs[i], g[i] * mu[i] * inverse(g[i]));
      std::vector<REnd> ginv;
      for (const auto& x : g) ginv.push_back(inverse(x));
      EXPECT_EQ(gauge(gauge(rep, g), ginv), rep);
    }
  }
}

TEST(RandomRep, Determinism) {
  QuiverPtr q = three_chain(1, 2);
  EXPECT_EQ(random_rep(q, {1, 2, 1}, 7), random_rep(q, {1, 2, 1}, 7));
  EXPECT_NE(random_rep(q, {1, 2, 1}, 7), random_rep(q, {1, 2, 1}, 8));
  Representation empty = random_rep(q, {0, 0, 0}, 7);
  for (const auto& m : empty.maps()) EXPECT_EQ(m.flat().rows() * m.flat().cols(), 0u);
  Representation r = random_rep(a2(), {1, 1}, 7);
  EXPECT_TRUE(perpendicularity_defect(moment_map(r)).is_zero());
  for (std::size_t h = 0; h < r.maps().size(); ++h) EXPECT_TRUE(r.map(h).is_linear_over(r.map(h).base()));
}
