#include <gtest/gtest.h>

#include "qs/error.hpp"
#include "qs/orbit.hpp"
#include "qs/random.hpp"
#include "support/helpers.hpp"

using namespace qs;
using testing_support::qm;
using testing_support::ts;

namespace {

OrbitSpec random_spec(SplitMix64& rng, int max_d = 3) {
  const int d = static_cast<int>(rng.uniform(1, max_d));
  const auto blocks = static_cast<std::size_t>(rng.uniform(2, 4));
  std::vector<OrbitBlock> out;
  for (std::size_t b = 0; b < blocks; ++b) {
    TruncScalar theta = random_scalar(rng, d);
    theta[0] = GaussQ(static_cast<long>(3 * b) - 2);
    out.push_back({static_cast<std::size_t>(rng.uniform(b == 0 ? 0 : 1, 2)), theta});
  }
  return OrbitSpec(d, std::move(out));
}

REnd conjugate(SplitMix64& rng, const OrbitSpec& spec) {
  REnd g = random_gauge(rng, spec.rank(), spec.order());
  return g * spec.theta_matrix() * inverse(g);
}

// For d = 1: A is conjugate to Theta iff dim ker(A - theta_j) = dim W_j for all j (and they fill V).
bool diagonalisable_oracle(const OrbitSpec& spec, const QMatrix& a) {
  std::size_t total = 0;
  for (const auto& b : spec.blocks()) {
    QMatrix shifted = a - b.theta[0] * QMatrix::identity(a.rows());
    const std::size_t nullity = a.rows() - rank(shifted);
    if (nullity != b.dim) return false;
    total += nullity;
  }
  return total == a.rows();
}

}  // namespace

TEST(OrbitSpec, Validation) {
  EXPECT_THROW(OrbitSpec(2, {{1, ts({1, 0})}}), Error);
  EXPECT_THROW(OrbitSpec(2, {{1, ts({1, 0})}, {1, ts({1, 5})}}), Error);
  EXPECT_THROW(OrbitSpec(2, {{1, ts({1, 0})}, {1, ts({2})}}), Error);
  OrbitSpec s(2, {{1, ts({0, 0})}, {2, ts({1, 3})}, {1, ts({-1, 0})}});
  EXPECT_EQ(s.rank(), 4u);
  EXPECT_EQ(s.legs(), 2u);
  EXPECT_EQ(s.leg_rank(1), 3u);
  EXPECT_EQ(s.leg_rank(2), 1u);
  EXPECT_EQ(s.lambda(1), ts({1, 3}));
  EXPECT_EQ(s.lambda(2), ts({-2, -3}));
}

TEST(Orbit, MembershipExamples) {
  OrbitSpec s(1, {{2, ts({0})}, {1, ts({1})}});
  Membership m = orbit_membership(s, s.theta_matrix());
  ASSERT_TRUE(m.member);
  EXPECT_EQ(m.idempotents[0], REnd::from_coeffs(3, 1, {qm(3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 0})}));
  EXPECT_EQ(m.idempotents[1], REnd::from_coeffs(3, 1, {qm(3, 3, {0, 0, 0, 0, 0, 0, 0, 0, 1})}));
  REnd jordan = s.theta_matrix() + REnd::from_coeffs(3, 1, {qm(3, 3, {0, 1, 0, 0, 0, 0, 0, 0, 0})});
  Membership bad = orbit_membership(s, jordan);
  EXPECT_FALSE(bad.member);
  EXPECT_FALSE(bad.reason.empty());
  // wrong eigenvalue multiplicities
  OrbitSpec other(1, {{1, ts({0})}, {2, ts({1})}});
  EXPECT_FALSE(orbit_membership(other, s.theta_matrix()).member);
}

TEST(Orbit, NilpotentPerturbationOverR2) {
  OrbitSpec s(2, {{1, ts({0, 0})}, {1, ts({1, 1})}});
  REnd a = s.theta_matrix() + REnd::from_coeffs(2, 2, {QMatrix(2, 2), qm(2, 2, {1, 0, 0, 0})});
  EXPECT_FALSE(orbit_membership(s, a).member);
  EXPECT_THROW(leg_factorize(s, a), Error);
}

TEST(OrbitProperty, MembershipAgreesWithDiagonalisabilityOracle) {
  SplitMix64 rng(41);
  for (int t = 0; t < 200; ++t) {
    OrbitSpec spec(1, {{static_cast<std::size_t>(rng.uniform(0, 2)), ts({0})}, {static_cast<std::size_t>(rng.uniform(1, 2)), ts({1})}});
    const std::size_t n = spec.rank();
    // small entries make both outcomes frequent
    QMatrix a = random_matrix(rng, n, n, 1);
    if (t % 2 == 0) a = conjugate(rng, spec).flat();
    REnd e = REnd::from_coeffs(n, 1, {a});
    EXPECT_EQ(orbit_membership(spec, e).member, diagonalisable_oracle(spec, a));
  }
}

TEST(OrbitProperty, ConjugatesAreMembersAndTraceShiftsAreNot) {
  SplitMix64 rng(42);
  for (int t = 0; t < 60; ++t) {
    OrbitSpec spec = random_spec(rng);
    REnd a = conjugate(rng, spec);
    Membership m = orbit_membership(spec, a);
    EXPECT_TRUE(m.member) << m.reason;
    REnd sum = REnd::zero(spec.rank(), spec.order());
    for (const auto& p : m.idempotents) sum = sum + p;
    EXPECT_EQ(sum, REnd::identity(spec.rank(), spec.order()));
    // trace is a conjugation invariant; shifting one diagonal coefficient changes it
    std::vector<QMatrix> coeffs;
    for (int k = 0; k < spec.order(); ++k) coeffs.push_back(a.coeff(k));
    coeffs[static_cast<std::size_t>(rng.uniform(0, spec.order() - 1))](0, 0) += GaussQ(1);
    REnd b = REnd::from_coeffs(spec.rank(), spec.order(), coeffs);
    ASSERT_NE(trace_r(b), trace_r(a));
    EXPECT_FALSE(orbit_membership(spec, b).member);
  }
}

TEST(Orbit, CanonicalLegPoint) {
  OrbitSpec s(1, {{1, ts({0})}, {1, ts({1})}});
  LegPoint p = canonical_leg_point(s);
  EXPECT_EQ(leg_nu(s, p), REnd::from_coeffs(2, 1, {qm(2, 2, {0, 0, 0, 1})}));
  EXPECT_TRUE(is_zero(leg_residual(s, p)));
  OrbitSpec reduced(2, {{0, ts({0, 0})}, {2, ts({3, 1})}});
  EXPECT_EQ(leg_nu(reduced, canonical_leg_point(reduced)), REnd::scalar(2, ts({3, 1})));
  SplitMix64 rng(43);
  for (int t = 0; t < 30; ++t) {
    OrbitSpec spec = random_spec(rng);
    LegPoint b0 = canonical_leg_point(spec);
    EXPECT_EQ(leg_nu(spec, b0), spec.theta_matrix());
    EXPECT_TRUE(is_zero(leg_residual(spec, b0)));
    EXPECT_TRUE(leg_nondegenerate(spec, b0));
    EXPECT_EQ(leg_factorize(spec, spec.theta_matrix()).a, b0.a);
    EXPECT_EQ(leg_factorize(spec, spec.theta_matrix()).b, b0.b);
  }
}

TEST(OrbitProperty, FactorizationOfConjugates) {
  SplitMix64 rng(44);
  for (int t = 0; t < 60; ++t) {
    OrbitSpec spec = random_spec(rng);
    REnd a = conjugate(rng, spec);
    LegPoint pt = leg_factorize(spec, a);
    EXPECT_EQ(leg_nu(spec, pt), a);
    EXPECT_TRUE(is_zero(leg_residual(spec, pt)));
    EXPECT_TRUE(leg_nondegenerate(spec, pt));
    MomentValue mu = leg_moment(spec, pt);
    for (std::size_t i = 1; i <= spec.legs(); ++i) EXPECT_EQ(mu[i - 1], REnd::scalar(spec.leg_rank(i), -spec.lambda(i)));
  }
}

TEST(OrbitProperty, LegGroupPreservesFibres) {
  SplitMix64 rng(45);
  for (int t = 0; t < 30; ++t) {
    OrbitSpec spec = random_spec(rng);
    LegPoint pt = leg_factorize(spec, conjugate(rng, spec));
    std::vector<REnd> g;
    for (std::size_t i = 1; i <= spec.legs(); ++i) g.push_back(random_gauge(rng, spec.leg_rank(i), spec.order()));
    LegPoint moved = act_on_leg(spec, pt, g);
    EXPECT_EQ(leg_nu(spec, moved), leg_nu(spec, pt));
    EXPECT_TRUE(is_zero(leg_residual(spec, moved)));
    EXPECT_TRUE(leg_nondegenerate(spec, moved));
  }
}

TEST(OrbitProperty, FreeBasisOfIdempotentImage) {
  SplitMix64 rng(46);
  for (int t = 0; t < 30; ++t) {
    OrbitSpec spec = random_spec(rng);
    Membership m = orbit_membership(spec, conjugate(rng, spec));
    for (std::size_t i = 0; i < m.idempotents.size(); ++i) {
      FreeBasis fb = free_basis_of_image(m.idempotents[i]);
      EXPECT_EQ(fb.basis.src().rank, spec.blocks()[i].dim);
      EXPECT_EQ(compose(fb.coords, fb.basis), RMap::identity(fb.basis.src()));
      EXPECT_EQ(compose(m.idempotents[i], fb.basis), fb.basis);
    }
  }
}

TEST(Orbit, DimensionMatchesFormula) {
  SplitMix64 rng(47);
  for (int t = 0; t < 20; ++t) {
    OrbitSpec spec = random_spec(rng);
    EXPECT_EQ(orbit_dimension(spec), orbit_dimension_formula(spec));
  }
}

TEST(Orbit, ShiftDecompositionExamples) {
  SplitMix64 rng(48);
  REnd a1 = random_end(rng, 2, 1);
  ShiftDecomposition s1 = shift_decompose(a1);
  EXPECT_EQ(s1.top, a1.flat());
  EXPECT_TRUE(s1.rest.flat().is_zero());
  ShiftDecomposition s2 = shift_decompose(REnd::scalar(2, TruncScalar::monomial(3, 2)));
  EXPECT_EQ(s2.top, QMatrix::identity(2));
  EXPECT_TRUE(s2.rest.flat().is_zero());
  for (int t = 0; t < 20; ++t) {
    REnd a = random_end(rng, 2, 3);
    ShiftDecomposition s = shift_decompose(a);
    EXPECT_EQ(s.top, a.coeff(2));
    std::vector<QMatrix> coeffs{s.rest.coeff(0), s.rest.coeff(1), s.top};
    EXPECT_EQ(REnd::from_coeffs(2, 3, coeffs), a);
    EXPECT_TRUE(s.rest.coeff(2).is_zero());
  }
}

TEST(Orbit, ShiftMapExamples) {
  SplitMix64 rng(49);
  REnd b = shift_decompose(random_end(rng, 2, 2)).rest;
  EXPECT_EQ(shift_map(b, QMatrix(2, 2), GaussQ(0)), b);
  EXPECT_EQ(shift_map(REnd::zero(2, 2), QMatrix::identity(2), GaussQ(0)), REnd::scalar(2, ts({0, -1})));
  for (int t = 0; t < 20; ++t) {
    REnd rest = shift_decompose(random_end(rng, 3, 3)).rest;
    QMatrix m = random_matrix(rng, 3, 3);
    GaussQ zeta(rng.uniform(-4, 4));
    ShiftDecomposition s = shift_decompose(shift_map(rest, m, zeta));
    EXPECT_EQ(s.top, -(m + zeta * QMatrix::identity(3)));
    EXPECT_EQ(s.rest, rest);
  }
  EXPECT_THROW(shift_map(REnd::scalar(1, ts({0, 1})), QMatrix(1, 1), GaussQ(0)), Error);
}
