#include <gtest/gtest.h>

#include "qs/error.hpp"
#include "qs/random.hpp"
#include "qs/trunc.hpp"
#include "support/helpers.hpp"
#include "support/oracles.hpp"

using namespace qs;
using testing_support::ts;

TEST(GaussQ, ParseAndPrint) {
  EXPECT_EQ(GaussQ::parse("3"), GaussQ(3));
  EXPECT_EQ(GaussQ::parse("-2/4"), GaussQ(mpq_class(-1, 2)));
  EXPECT_EQ(GaussQ::parse("1/2+3/4i"), GaussQ(mpq_class(1, 2), mpq_class(3, 4)));
  EXPECT_EQ(GaussQ::parse("i"), GaussQ(0, 1));
  EXPECT_EQ(GaussQ::parse("-i"), GaussQ(0, -1));
  EXPECT_EQ(GaussQ(mpq_class(1, 2), mpq_class(-3)).str(), "1/2-3i");
  EXPECT_EQ(GaussQ(5).str(), "5");
  EXPECT_THROW(GaussQ::parse("x"), Error);
  EXPECT_THROW(GaussQ::parse(""), Error);
}

TEST(GaussQ, PrintParseRoundTrip) {
  SplitMix64 rng(11);
  for (int t = 0; t < 50; ++t) {
    GaussQ x(mpq_class(rng.uniform(-9, 9), rng.uniform(1, 9)), mpq_class(rng.uniform(-9, 9), rng.uniform(1, 9)));
    EXPECT_EQ(GaussQ::parse(x.str()), x);
  }
}

TEST(GaussQ, FieldArithmetic) {
  GaussQ z(mpq_class(1), mpq_class(2));
  EXPECT_EQ(z * z.conj(), GaussQ(5));
  EXPECT_EQ(z * z.inverse(), GaussQ(1));
  EXPECT_EQ(GaussQ(0, 1) * GaussQ(0, 1), GaussQ(-1));
  EXPECT_THROW(GaussQ(0).inverse(), Error);
}

TEST(TruncScalar, MultiplicationExamples) {
  EXPECT_EQ(trunc_mul(ts({1, 1}), ts({1, -1})), ts({1, 0}));
  EXPECT_EQ(trunc_mul(ts({0, 1}), ts({0, 1})), ts({0, 0}));
  EXPECT_EQ(trunc_mul(ts({1, 2, 0}), ts({3, 1, 0})), ts({3, 7, 2}));
  EXPECT_THROW(trunc_mul(ts({1}), ts({1, 0})), Error);
}

TEST(TruncScalar, InverseExamples) {
  EXPECT_EQ(trunc_inv(ts({1})), ts({1}));
  EXPECT_EQ(trunc_inv(ts({1, 1, 0})), ts({1, -1, 1}));
  EXPECT_EQ(trunc_inv(ts({2, 1})), TruncScalar({GaussQ(mpq_class(1, 2)), GaussQ(mpq_class(-1, 4))}));
  EXPECT_THROW(trunc_inv(ts({0, 1})), Error);
}

TEST(TruncScalar, ResiduePairExamples) {
  for (int d = 1; d <= 4; ++d) {
    for (int a = 0; a < d; ++a) {
      for (int b = 0; b < d; ++b) {
        EXPECT_EQ(residue_pair(TruncScalar::monomial(d, a), TruncScalar::monomial(d, b)), GaussQ(a + b == d - 1 ? 1 : 0));
      }
    }
  }
  EXPECT_EQ(residue_pair(ts({1}), ts({1})), GaussQ(1));
  EXPECT_EQ(residue_pair(ts({1, 2}), ts({3, 1})), GaussQ(7));
}

TEST(TruncScalar, EmbedExamples) {
  EXPECT_EQ(embed_subring(ts({1}), 3), ts({1, 0, 0}));
  EXPECT_EQ(embed_subring(ts({0, 1}), 4), ts({0, 0, 1, 0}));
  EXPECT_EQ(embed_subring(ts({2, 3}), 6), ts({2, 0, 0, 3, 0, 0}));
  EXPECT_THROW(embed_subring(ts({1, 1}), 3), Error);
}

TEST(TruncScalar, ParseAndPrint) {
  EXPECT_EQ(TruncScalar::parse("[1, 2/3, i]"), TruncScalar({GaussQ(1), GaussQ(mpq_class(2, 3)), GaussQ(0, 1)}));
  EXPECT_EQ(ts({1, -2}).str(), "[1, -2]");
  EXPECT_EQ(TruncScalar::parse(ts({4, 0, -1}).str()), ts({4, 0, -1}));
  EXPECT_THROW(TruncScalar::parse("1, 2"), Error);
}

TEST(TruncScalarProperty, ProductMatchesConvolution) {
  SplitMix64 rng(101);
  for (int t = 0; t < 100; ++t) {
    const int d = static_cast<int>(rng.uniform(1, 6));
    TruncScalar a = random_scalar(rng, d);
    TruncScalar b = random_scalar(rng, d);
    EXPECT_EQ(trunc_mul(a, b).coeffs(), oracle::poly_mul(a.coeffs(), b.coeffs(), static_cast<std::size_t>(d)));
    EXPECT_EQ(trunc_mul(a, b), trunc_mul(b, a));
  }
}

TEST(TruncScalarProperty, InverseIsTwoSided) {
  SplitMix64 rng(102);
  for (int t = 0; t < 100; ++t) {
    const int d = static_cast<int>(rng.uniform(1, 6));
    TruncScalar u = random_unit(rng, d);
    EXPECT_EQ(trunc_mul(u, trunc_inv(u)), TruncScalar::constant(d, 1));
  }
}

TEST(TruncScalarProperty, PairingIsSymmetricAndNondegenerate) {
  SplitMix64 rng(103);
  for (int t = 0; t < 50; ++t) {
    const int d = static_cast<int>(rng.uniform(1, 5));
    TruncScalar a = random_scalar(rng, d);
    TruncScalar b = random_scalar(rng, d);
    EXPECT_EQ(residue_pair(a, b), residue_pair(b, a));
    EXPECT_EQ(residue_pair(a, b), oracle::poly_mul(a.coeffs(), b.coeffs(), static_cast<std::size_t>(d)).back());
    if (!a.is_zero()) {
      bool some_nonzero = false;
      for (int k = 0; k < d; ++k) some_nonzero = some_nonzero || !residue_pair(a, TruncScalar::monomial(d, k)).is_zero();
      EXPECT_TRUE(some_nonzero);
    }
  }
}

TEST(TruncScalarProperty, EmbeddingIsRingHomomorphism) {
  SplitMix64 rng(104);
  for (auto [c, d] : {std::pair{1, 2}, {1, 3}, {2, 4}, {3, 6}, {2, 6}}) {
    for (int t = 0; t < 20; ++t) {
      TruncScalar a = random_scalar(rng, c);
      TruncScalar b = random_scalar(rng, c);
      EXPECT_EQ(embed_subring(trunc_mul(a, b), d), trunc_mul(embed_subring(a, d), embed_subring(b, d)));
      EXPECT_EQ(embed_subring(a + b, d), embed_subring(a, d) + embed_subring(b, d));
    }
  }
}
