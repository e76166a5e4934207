#include <gtest/gtest.h>

#include "cubicsym/errors.hpp"
#include "support.hpp"

using namespace cubicsym;
using testsupport::randomCyc;
using testsupport::randomNonzeroCyc;

TEST(Cyclo, ReduceKnownValues) {
  EXPECT_EQ(CycNum::zeta(4, 2), CycNum::fromInt(-1, 4));
  EXPECT_EQ(CycNum::zeta(3) + CycNum::zeta(3, 2), CycNum::fromInt(-1, 3));
  CycNum sqrt2 = CycNum::zeta(8) + CycNum::zeta(8, -1);
  EXPECT_EQ(sqrt2 * sqrt2, CycNum::fromInt(2, 8));
  EXPECT_EQ(CycNum::reduce({{-1, 1}, {9, 2}}, 8), CycNum::zeta(8, 7) + CycNum::zeta(8, 1).scaled(2));
}

TEST(Cyclo, ReduceRejectsZeroConductor) { EXPECT_THROW(CycNum::reduce({{0, 1}}, 0), InputError); }

TEST(Cyclo, CanonicalFormInvariants) {
  std::mt19937 rng(7);
  for (unsigned n : {3u, 8u, 12u, 43u}) {
    for (int t = 0; t < 20; ++t) {
      CycNum a = randomCyc(rng, n) * randomCyc(rng, n);
      EXPECT_LE(a.coeffs().size(), eulerPhi(n));
      EXPECT_GT(a.den().sign(), 0);
      for (size_t i = 1; i < a.terms().size(); ++i) EXPECT_LT(a.terms()[i - 1].e, a.terms()[i].e);
      for (const auto& term : a.terms()) {
        EXPECT_FALSE(term.c.isZero());
        EXPECT_LT(term.e, eulerPhi(n));
      }
    }
  }
}

TEST(Cyclo, ArithmeticExamples) {
  CycNum one = CycNum::one(8), z = CycNum::zeta(8);
  EXPECT_EQ((one + z) * (one - z), one - CycNum::zeta(8, 2));
  for (unsigned n : {3u, 5u, 12u, 43u, 96u}) EXPECT_EQ(CycNum::zeta(n).inv(), CycNum::zeta(n, n - 1));
  CycNum w = CycNum::one(3) + CycNum::zeta(3);
  // 1 + zeta3 = -zeta3^2, so its inverse is -zeta3.
  EXPECT_EQ(w, -CycNum::zeta(3, 2));
  EXPECT_EQ(w.inv(), -CycNum::zeta(3));
  EXPECT_TRUE((w * w.inv()).isOne());
}

TEST(Cyclo, DomainErrors) {
  EXPECT_THROW(CycNum::zero(5).inv(), DomainError);
  EXPECT_THROW(CycNum::zeta(3) + CycNum::zeta(4), DomainError);
  EXPECT_THROW(embed(CycNum::zeta(3), 8), DomainError);
}

TEST(Cyclo, EmbedExamples) {
  EXPECT_EQ(embed(CycNum::zeta(3), 12), CycNum::zeta(12, 4));
  for (unsigned k = 1; k <= 12; ++k) EXPECT_EQ(embed(CycNum::fromInt(-1, 2), 2 * k), CycNum::fromInt(-1, 2 * k));
  CycNum s = embed(CycNum::zeta(8) + CycNum::zeta(8, 7), 24);
  EXPECT_EQ(s * s, CycNum::fromInt(2, 24));
}

TEST(Cyclo, EncodingRoundTrip) {
  std::mt19937 rng(3);
  for (unsigned n : {1u, 3u, 12u, 43u, 64u}) {
    for (int t = 0; t < 20; ++t) {
      CycNum a = randomCyc(rng, n);
      EXPECT_EQ(CycNum::decode(a.encode()), a);
      EXPECT_EQ(CycNum::decode(a.encode()).encode(), a.encode());
    }
  }
  EXPECT_EQ(CycNum::zeta(3).encode(), "3 1 0 1");
}

TEST(CycloProperty, FieldAxiomsOnThousandSamples) {
  std::mt19937 rng(20261018);
  const unsigned conductors[] = {3, 4, 8, 12, 24, 43};
  for (int t = 0; t < 1000; ++t) {
    unsigned n = conductors[t % 6];
    CycNum a = randomCyc(rng, n), b = randomCyc(rng, n), c = randomCyc(rng, n);
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_TRUE((a - a).isZero());
    if (!a.isZero()) ASSERT_TRUE((a * a.inv()).isOne());
  }
}

TEST(CycloProperty, EmbedIsRingHomomorphism) {
  std::mt19937 rng(11);
  const std::pair<unsigned, unsigned> pairs[] = {{3, 12}, {4, 24}, {8, 24}, {12, 24}, {3, 96}};
  for (int t = 0; t < 200; ++t) {
    auto [n, m] = pairs[t % 5];
    CycNum a = randomCyc(rng, n), b = randomCyc(rng, n);
    ASSERT_EQ(embed(a * b, m), embed(a, m) * embed(b, m));
    ASSERT_EQ(embed(a + b, m), embed(a, m) + embed(b, m));
  }
}

TEST(CycloProperty, ZetaHasExactOrder) {
  for (unsigned n = 1; n <= 96; ++n) {
    CycNum z = CycNum::zeta(n), p = CycNum::one(n);
    for (unsigned k = 1; k < n; ++k) {
      p *= z;
      ASSERT_FALSE(p.isOne()) << "zeta_" << n << "^" << k;
    }
    ASSERT_TRUE((p * z).isOne());
  }
}
