#include <gtest/gtest.h>

#include "qs/error.hpp"
#include "qs/random.hpp"
#include "qs/weyl.hpp"
#include "support/helpers.hpp"
#include "support/oracles.hpp"

using namespace qs;
using testing_support::make_quiver;
using testing_support::three_chain;
using testing_support::ts;

namespace {

ParamVector random_params(SplitMix64& rng, const QuiverMult& q) {
  ParamVector out;
  for (int d : q.multiplicities()) out.push_back(random_scalar(rng, d));
  return out;
}

std::vector<QuiverPtr> sample_quivers() {
  return {three_chain(1, 2), three_chain(1, 3), three_chain(2, 2), three_chain(3, 3),
          make_quiver("quiver { vertex a mult 2 vertex b mult 3 vertex c mult 6 arrow x : a -> c arrow y : b -> c }"),
          make_quiver("quiver { vertex a mult 4 vertex b mult 2 arrow x : a -> b arrow y : b -> a }")};
}

}  // namespace

TEST(Weyl, DimensionReflectionExamples) {
  QuiverPtr q = three_chain(1, 2);
  EXPECT_EQ(reflect_dim(*q, 0, {0, 0, 0}), (DimVector{0, 0, 0}));
  EXPECT_EQ(reflect_dim(*q, 0, {1, 0, 0}), (DimVector{-1, 0, 0}));
  EXPECT_EQ(reflect_dim(*q, 0, {1, 1, 1}), (DimVector{2, 1, 1}));
  EXPECT_THROW(reflect_dim(*q, 3, {1, 1, 1}), Error);
}

TEST(Weyl, ParameterReflectionExamples) {
  QuiverPtr q = three_chain(1, 2);
  EXPECT_EQ(reflect_param(*q, 0, zero_params(*q)), zero_params(*q));
  EXPECT_EQ(reflect_param(*q, 0, {ts({3}), ts({1, 0}), ts({5})}), (ParamVector{ts({-3}), ts({1, 6}), ts({8})}));
  for (int d = 2; d <= 4; ++d) {
    QuiverPtr qd = three_chain(1, d);
    SplitMix64 rng(static_cast<std::uint64_t>(d));
    ParamVector lambda = random_params(rng, *qd);
    ParamVector r = reflect_param(*qd, 0, lambda);
    EXPECT_EQ(r[0], -lambda[0]);
    EXPECT_EQ(r[1], lambda[1] + TruncScalar::monomial(d, d - 1, GaussQ(d) * lambda[0][0]));
    EXPECT_EQ(r[2], lambda[2] + lambda[0]);
  }
}

TEST(Weyl, ParameterReflectionRejectsWrongOrders) {
  QuiverPtr q = three_chain(1, 2);
  EXPECT_THROW(reflect_param(*q, 0, {ts({3}), ts({1}), ts({5})}), Error);
  EXPECT_THROW(reflect_param(*q, 0, {ts({3})}), Error);
}

TEST(Weyl, TransposeActionExamples) {
  QuiverPtr plain = make_quiver("quiver { vertex a mult 1 vertex b mult 1 vertex c mult 1 arrow x : a -> b arrow y : b -> c }");
  const ZMatrix c = cartan(*plain).cartan;
  ParamVector kappa{ts({2}), ts({-1}), ts({4})};
  ParamVector s = transpose_action(*plain, 1, kappa);
  EXPECT_EQ(s[1], ts({-1 - (c(1, 0) * 2 + c(1, 1) * -1 + c(1, 2) * 4)}));
  EXPECT_EQ(s[0], kappa[0]);
  EXPECT_EQ(transpose_action(*plain, 1, zero_params(*plain)), zero_params(*plain));
}

TEST(Weyl, TransposeDualityOnBasisPairs) {
  for (const auto& q : sample_quivers()) {
    const std::size_t n = param_dim(*q);
    for (std::size_t i = 0; i < q->vertex_count(); ++i) {
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          std::vector<GaussQ> ea(n, GaussQ(0)), eb(n, GaussQ(0));
          ea[a] = 1;
          eb[b] = 1;
          ParamVector lambda = unflatten(*q, ea);
          ParamVector kappa = unflatten(*q, eb);
          GaussQ lhs(0), rhs(0);
          ParamVector sk = transpose_action(*q, i, kappa);
          ParamVector rl = reflect_param(*q, i, lambda);
          for (std::size_t j = 0; j < q->vertex_count(); ++j) {
            lhs += residue_pair(lambda[j], sk[j]);
            rhs += residue_pair(rl[j], kappa[j]);
          }
          EXPECT_EQ(lhs, rhs);
        }
      }
    }
  }
}

TEST(Weyl, LiftedCartanMatchesMembershipRule) {
  for (const auto& q : sample_quivers()) {
    LiftedCartan lc = lift_cartan(*q);
    ASSERT_EQ(lc.index.size(), param_dim(*q));
    for (std::size_t a = 0; a < lc.index.size(); ++a) {
      EXPECT_EQ(lc.cartan(a, a), 2);
      for (std::size_t b = 0; b < lc.index.size(); ++b) {
        const auto [i, k] = lc.index[a];
        const auto [j, l] = lc.index[b];
        EXPECT_EQ(lc.cartan(a, b), oracle::lifted_entry(*q, i, k, j, l));
      }
    }
    EXPECT_TRUE(lc.symmetrizable());
  }
}

TEST(Weyl, LiftedCartanReadsOffTransposeAction) {
  // c~ rows of vertex i are Id - (matrix of s~_i) on those rows
  for (const auto& q : sample_quivers()) {
    LiftedCartan lc = lift_cartan(*q);
    for (std::size_t i = 0; i < q->vertex_count(); ++i) {
      const ZMatrix s = transpose_action_matrix(*q, i);
      for (std::size_t a = 0; a < lc.index.size(); ++a) {
        for (std::size_t b = 0; b < lc.index.size(); ++b) {
          const std::int64_t expected = lc.index[a].first == i ? (a == b ? 1 : 0) - lc.cartan(a, b) : (a == b ? 1 : 0);
          EXPECT_EQ(s(a, b), expected);
        }
      }
    }
  }
}

TEST(Weyl, LiftedCartanExampleOneAtTwo) {
  QuiverPtr q = three_chain(1, 2);
  LiftedCartan lc = lift_cartan(*q);
  ASSERT_EQ(lc.index.size(), 4u);
  // index order (i,0), (j,0), (j,1), (k,0)
  EXPECT_EQ(lc.cartan(1, 0), -1);
  EXPECT_EQ(lc.cartan(2, 0), 0);
  EXPECT_EQ(lc.cartan(0, 1), -2);
  EXPECT_EQ(lc.cartan(0, 2), 0);
  const QuiverPtr plain = make_quiver("quiver { vertex a mult 1 vertex b mult 1 arrow x : a -> b }");
  EXPECT_EQ(lift_cartan(*plain).cartan, cartan(*plain).cartan);
}

TEST(Weyl, CoxeterOrders) {
  QuiverPtr disconnected = make_quiver("quiver { vertex a mult 1 vertex b mult 2 }");
  EXPECT_EQ(coxeter_order(*disconnected, 0, 1), 2);
  for (int d = 2; d <= 5; ++d) {
    QuiverPtr q = three_chain(1, d);
    EXPECT_EQ(coxeter_order(*q, 0, 2), 3);
    const auto m = coxeter_order(*q, 0, 1);
    const int expected = oracle::table_order(d);
    if (expected == 0) {
      EXPECT_FALSE(m.has_value());
    } else {
      EXPECT_EQ(m, expected);
    }
  }
  EXPECT_EQ(coxeter_order(*three_chain(1, 2), 0, 1), 4);
  EXPECT_EQ(coxeter_order(*three_chain(1, 3), 0, 1), 6);
  EXPECT_THROW(coxeter_order(*three_chain(1, 2), 1, 1), Error);
}

TEST(Weyl, CoxeterRelationsByDirectPowering) {
  for (const auto& q : sample_quivers()) {
    EXPECT_TRUE(verify_coxeter(*q).ok());
    const ZMatrix c = cartan(*q).cartan;
    for (std::size_t i = 0; i < q->vertex_count(); ++i) {
      const ZMatrix ri = param_reflection_matrix(*q, i);
      EXPECT_EQ(ri * ri, ZMatrix::identity(param_dim(*q)));
      for (std::size_t j = i + 1; j < q->vertex_count(); ++j) {
        const int m = oracle::table_order(c(i, j) * c(j, i));
        if (m == 0) continue;
        const ZMatrix rr = ri * param_reflection_matrix(*q, j);
        const ZMatrix ss = dim_reflection_matrix(*q, i) * dim_reflection_matrix(*q, j);
        EXPECT_EQ(power(rr, static_cast<unsigned>(m)), ZMatrix::identity(param_dim(*q)));
        EXPECT_EQ(power(ss, static_cast<unsigned>(m)), ZMatrix::identity(q->vertex_count()));
        if (m > 2) EXPECT_NE(power(ss, static_cast<unsigned>(m / 2)), ZMatrix::identity(q->vertex_count()));
      }
    }
  }
  QuiverPtr single = make_quiver("quiver { vertex a mult 3 }");
  Report r = verify_coxeter(*single);
  EXPECT_TRUE(r.ok());
  EXPECT_FALSE(r.checks.empty());
}

TEST(Weyl, ExampleTwoUnitPairHasOrderThree) {
  QuiverPtr q = three_chain(3, 3);
  const ZMatrix rr = param_reflection_matrix(*q, 0) * param_reflection_matrix(*q, 1);
  EXPECT_EQ(power(rr, 3), ZMatrix::identity(param_dim(*q)));
  EXPECT_NE(rr, ZMatrix::identity(param_dim(*q)));
}

TEST(Weyl, RhoExamplesAndIntertwining) {
  QuiverPtr q = three_chain(1, 2);
  EXPECT_EQ(rho(*q, {ts({0}), ts({0, 1}), ts({0})}), (std::vector<GaussQ>{0, 1, 0}));
  EXPECT_EQ(rho(*q, {ts({0}), ts({1, 0}), ts({0})}), (std::vector<GaussQ>{0, 0, 0}));
  SplitMix64 rng(9);
  for (const auto& qq : sample_quivers()) {
    for (int t = 0; t < 10; ++t) {
      ParamVector lambda = random_params(rng, *qq);
      for (std::size_t i = 0; i < qq->vertex_count(); ++i) {
        std::vector<GaussQ> lhs = rho(*qq, reflect_param(*qq, i, lambda));
        std::vector<GaussQ> x = rho(*qq, lambda);
        const ZMatrix st = dim_reflection_matrix(*qq, i).transpose();
        for (std::size_t a = 0; a < x.size(); ++a) {
          GaussQ expected(0);
          for (std::size_t b = 0; b < x.size(); ++b) expected += GaussQ(st(a, b)) * x[b];
          EXPECT_EQ(lhs[a], expected);
        }
      }
    }
  }
}

TEST(WeylProperty, ReflectionsAreLinearInvolutions) {
  SplitMix64 rng(21);
  for (const auto& q : sample_quivers()) {
    for (int t = 0; t < 10; ++t) {
      ParamVector a = random_params(rng, *q);
      ParamVector b = random_params(rng, *q);
      for (std::size_t i = 0; i < q->vertex_count(); ++i) {
        EXPECT_EQ(reflect_param(*q, i, reflect_param(*q, i, a)), a);
        ParamVector sum(a.size(), TruncScalar(1));
        for (std::size_t j = 0; j < a.size(); ++j) sum[j] = a[j] + b[j];
        ParamVector ra = reflect_param(*q, i, a);
        ParamVector rb = reflect_param(*q, i, b);
        ParamVector rs = reflect_param(*q, i, sum);
        for (std::size_t j = 0; j < a.size(); ++j) EXPECT_EQ(rs[j], ra[j] + rb[j]);
        EXPECT_EQ(unflatten(*q, flatten(a)), a);
      }
    }
  }
}

TEST(WeylProperty, ParameterMatrixAgreesWithFormula) {
  SplitMix64 rng(22);
  for (const auto& q : sample_quivers()) {
    for (std::size_t i = 0; i < q->vertex_count(); ++i) {
      const ZMatrix r = param_reflection_matrix(*q, i);
      ParamVector lambda = random_params(rng, *q);
      std::vector<GaussQ> x = flatten(lambda);
      std::vector<GaussQ> y = flatten(reflect_param(*q, i, lambda));
      for (std::size_t a = 0; a < x.size(); ++a) {
        GaussQ acc(0);
        for (std::size_t b = 0; b < x.size(); ++b) acc += GaussQ(r(a, b)) * x[b];
        EXPECT_EQ(acc, y[a]);
      }
    }
  }
}
