#include <gtest/gtest.h>

#include "cubicsym/diffrank.hpp"
#include "cubicsym/errors.hpp"
#include "cubicsym/groups.hpp"
#include "cubicsym/smooth.hpp"
#include "support.hpp"

using namespace cubicsym;
using namespace testsupport;

namespace {

std::vector<CycNum> unit(int m, int i, unsigned n) {
  std::vector<CycNum> v(m, CycNum::zero(n));
  v[i] = CycNum::one(n);
  return v;
}

Form hesse(const CycNum& lambda) {
  unsigned n = lambda.conductor();
  return Form::parse("x1^3 + x2^3 + x3^3", 3, n) + Form::parse("x1*x2*x3", 3, n).scaled(lambda);
}

// 3(sqrt3 - 1) with sqrt3 = z + z^11 at conductor 12.
CycNum hesseSpecialValue() {
  CycNum sqrt3 = CycNum::zeta(12) + CycNum::zeta(12, 11);
  return (sqrt3 - CycNum::one(12)).scaled(3);
}

}  // namespace

TEST(DiffRank, Examples) {
  EXPECT_EQ(rankD(Form::fermat(7, 3), 1), 7);
  EXPECT_EQ(rankD(Form::parse("x1^3", 4, 1), 1), 1);
  EXPECT_EQ(rankD(Form::parse("x1^2*x2", 2, 1), 2), 2);
  EXPECT_EQ(rankD(Form::fermat(5, 3), 3), 1);
  EXPECT_THROW(rankD(Form::fermat(3, 3), 0), InputError);
  EXPECT_THROW(rankD(Form::fermat(3, 3), 4), InputError);
}

TEST(DiffRank, Derivative) {
  Form f = Form::parse("x1^3*x2 + x2^4", 2, 1);
  EXPECT_EQ(derivative(f, ex({2, 0})), Form::parse("6*x1*x2", 2, 1));
  EXPECT_EQ(derivative(f, ex({0, 1})), Form::parse("x1^3 + 4*x2^3", 2, 1));
}

TEST(DiffRank, CharacteristicSetExamples) {
  EXPECT_TRUE(charSetMember(Form::fermat(7, 3), unit(7, 0, 1), 1));
  Form h1 = hesse(CycNum::one(1));
  EXPECT_FALSE(charSetMember(h1, unit(3, 0, 1), 1));
  EXPECT_TRUE(charSetMember(h1, unit(3, 0, 1), 3));
  EXPECT_EQ(rank(hessianAt(h1, unit(3, 0, 1))), 3);
  EXPECT_THROW(charSetMember(h1, std::vector<CycNum>(3, CycNum::zero(1)), 1), InputError);
}

TEST(DiffRank, S1Decisions) {
  S1Result fermat = s1NonEmpty(Form::fermat(3, 3));
  EXPECT_EQ(fermat.status, S1Status::Yes);
  ASSERT_TRUE(fermat.witness);
  // The witness lives at the conductor of the search, lcm(conductor, 3).
  EXPECT_TRUE(charSetMember(Form::fermat(3, 3).embedded(fermat.witness->front().conductor()), *fermat.witness, 1));

  S1Result special = s1NonEmpty(hesse(hesseSpecialValue()));
  EXPECT_EQ(special.status, S1Status::No) << special.method;

  S1Result h2 = s1NonEmpty(Form::parse("x1^2*x2 + x1*x2^2", 2, 1));
  EXPECT_EQ(h2.status, S1Status::Yes);
}

TEST(DiffRank, S1AgreesWithPartitionabilityOnHesse) {
  // A smooth plane cubic splits as x^3 + G(y, z) exactly when its j-invariant
  // vanishes; on this pencil that is lambda = 0 or lambda = 6.
  EXPECT_EQ(s1NonEmpty(hesse(CycNum::zero(1))).status, S1Status::Yes);
  EXPECT_EQ(s1NonEmpty(hesse(CycNum::fromInt(6, 1))).status, S1Status::Yes);
  EXPECT_EQ(s1NonEmpty(hesse(CycNum::one(1))).status, S1Status::No);
}

TEST(DiffRank, EigenPartitionWitness) {
  auto w25 = eigenPartitionWitness(diagZeta({{3, 1}, {3, 1}, {1, 0}, {1, 0}, {1, 0}, {1, 0}, {1, 0}}, 3));
  ASSERT_TRUE(w25);
  EXPECT_EQ(*w25, std::make_pair(2, 5));
  auto w34 = eigenPartitionWitness(diagZeta({{3, 1}, {3, 1}, {3, 1}, {1, 0}, {1, 0}, {1, 0}, {1, 0}}, 3));
  ASSERT_TRUE(w34);
  EXPECT_EQ(*w34, std::make_pair(3, 4));
  EXPECT_FALSE(eigenPartitionWitness(diagZeta({{3, 1}, {1, 0}, {1, 0}, {1, 0}, {1, 0}, {1, 0}, {1, 0}}, 3)));
  // A scalar multiple of a witness still counts.
  auto w = eigenPartitionWitness(diagZeta({{3, 2}, {3, 2}, {3, 1}, {3, 1}, {3, 1}, {3, 1}, {3, 1}}, 3));
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, std::make_pair(2, 5));
}

TEST(DiffRank, SupportPartitionExamples) {
  std::vector<Exps> c11 = {ex({0, 0, 0, 0, 0, 0, 3}), ex({0, 0, 0, 0, 0, 1, 2}), ex({0, 0, 0, 0, 0, 2, 1}),
                           ex({0, 0, 0, 0, 0, 3, 0}), ex({0, 0, 2, 1, 0, 0, 0}), ex({0, 1, 0, 2, 0, 0, 0}),
                           ex({0, 2, 0, 0, 1, 0, 0}), ex({1, 0, 0, 0, 2, 0, 0}), ex({2, 0, 1, 0, 0, 0, 0})};
  auto r = supportPartition(c11, 7);
  EXPECT_EQ(r.blocks, (std::vector<std::vector<int>>{{0, 1, 2, 3, 4}, {5, 6}}));
  EXPECT_TRUE(r.residual.empty());

  std::vector<Exps> c45 = {ex({2, 1, 0, 0, 0, 0, 0}), ex({0, 2, 1, 0, 0, 0, 0}), ex({1, 0, 2, 0, 0, 0, 0}),
                           ex({0, 0, 0, 2, 1, 0, 0}), ex({0, 0, 0, 0, 2, 1, 0}), ex({0, 0, 0, 0, 0, 2, 1}),
                           ex({0, 0, 0, 1, 0, 0, 2})};
  EXPECT_EQ(supportPartition(c45, 7).blocks, (std::vector<std::vector<int>>{{0, 1, 2}, {3, 4, 5, 6}}));

  EXPECT_EQ(supportPartition(monomials(7, 3), 7).blocks, (std::vector<std::vector<int>>{{0, 1, 2, 3, 4, 5, 6}}));

  auto partial = supportPartition({ex({3, 0, 0}), ex({0, 3, 0})}, 3);
  EXPECT_EQ(partial.residual, std::vector<int>{2});
}

TEST(DiffRank, PartitionReportUsesEigenWitness) {
  // F = P(F0) with F0 split as (x1, x2) + (x3..x7) is fixed by P^-1 D P.
  std::mt19937 rng(8);
  Form f0 = Form::fermat(7, 3, 3) + Form::parse("x1^2*x2 + x3*x4*x5 + x5*x6*x7", 7, 3);
  CycMatrix d = diagZeta({{3, 1}, {3, 1}, {1, 0}, {1, 0}, {1, 0}, {1, 0}, {1, 0}}, 3);
  ASSERT_EQ(apply(d, f0), f0);
  CycMatrix p = randomInvertible(rng, 7, 3);
  Form f = apply(p, f0);
  MatGroup g({p.inverse() * d * p});
  ASSERT_EQ(apply(g.generators()[0], f), f);
  auto bySupport = partitionReport(f, nullptr);
  EXPECT_EQ(bySupport.blocks.size(), 1u);
  auto r = partitionReport(f, &g);
  EXPECT_EQ(r.certifiedBy, PartitionCertificate::EigenvalueWitness);
  EXPECT_EQ(r.blocks, (std::vector<std::vector<int>>{{0, 1}, {2, 3, 4, 5, 6}}));
}

TEST(DiffRank, ExplicitPartitionCheck) {
  Form h2 = Form::parse("x1^2*x2 + x1*x2^2", 2, 12);
  CycMatrix a(2, 2, 12);
  a(0, 0) = CycNum::fromInt(-1, 12);
  a(0, 1) = CycNum::fromInt(-1, 12);
  a(1, 0) = -embed(CycNum::zeta(3), 12);
  a(1, 1) = -embed(CycNum::zeta(3, 2), 12);
  EXPECT_TRUE(verifyExplicitPartition(h2, a, {{0}, {1}}));
  EXPECT_FALSE(verifyExplicitPartition(h2, CycMatrix::identity(2, 12), {{0}, {1}}));
}

TEST(DiffRank, BlockShape) {
  GroupFile x2 = loadGroup(corpusPath("fivefolds/X2.group"));
  MatGroup g(x2.gens);
  EXPECT_TRUE(verifyBlockShape(g, {3, 4}));
  g.materialize();
  EXPECT_TRUE(verifyBlockShape(g, {3, 4}));
  std::vector<int> cycle{1, 2, 3, 4, 5, 6, 0};
  MatGroup c7 = MatGroup::closure({CycMatrix::permutation(cycle, 1)});
  EXPECT_FALSE(verifyBlockShape(c7, {3, 4}));
  MatGroup trivial = MatGroup::closure({CycMatrix::identity(7, 1)});
  EXPECT_TRUE(verifyBlockShape(trivial, {3, 4}));
  EXPECT_TRUE(verifyBlockShape(trivial, {1, 3, 3}));
}

TEST(DiffRankProperty, RankInvariantUnderCoordinateChange) {
  std::mt19937 rng(34);
  for (int t = 0; t < 100; ++t) {
    int m = 2 + t % 4;
    Form f = randomForm(rng, m, 3, 3, 0.3);
    CycMatrix a = randomInvertible(rng, m, 3);
    Form g = apply(a, f);
    for (int i = 1; i <= 3; ++i) ASSERT_EQ(rankD(f, i), rankD(g, i)) << "trial " << t << " order " << i;
  }
}

TEST(DiffRankProperty, CharacteristicSetTransport) {
  // With G = A(F), the partials transform by A^T, so l in S_r^F iff A^{-1} l in S_r^G.
  std::mt19937 rng(36);
  for (int t = 0; t < 100; ++t) {
    int m = 3 + t % 3;
    Form f = randomForm(rng, m, 3, 3, 0.4);
    CycMatrix a = randomInvertible(rng, m, 3);
    Form g = apply(a, f);
    std::vector<CycNum> l(m, CycNum::zero(3));
    do {
      for (auto& x : l) x = randomCyc(rng, 3, 1);
    } while (std::all_of(l.begin(), l.end(), [](const CycNum& x) { return x.isZero(); }));
    std::vector<CycNum> pl = a.inverse() * l;
    for (int r = 0; r <= m; ++r) ASSERT_EQ(charSetMember(f, l, r), charSetMember(g, pl, r)) << "trial " << t;
  }
}

TEST(DiffRankProperty, SupportPartitionIsEquivariant) {
  std::mt19937 rng(37);
  for (int t = 0; t < 50; ++t) {
    Form f = randomForm(rng, 6, 3, 1, 0.04);
    std::vector<int> perm{0, 1, 2, 3, 4, 5};
    std::shuffle(perm.begin(), perm.end(), rng);
    Form g = apply(CycMatrix::permutation(perm, 1), f);
    auto bf = supportPartition(support(f), 6).blocks;
    auto bg = supportPartition(support(g), 6).blocks;
    // g(x) = f(Px) puts x_perm[i] where f has x_i, so variable i of f is variable perm[i] of g.
    std::vector<int> inv(6);
    for (int i = 0; i < 6; ++i) inv[perm[i]] = i;
    std::vector<std::vector<int>> mapped;
    for (const auto& b : bg) {
      std::vector<int> nb;
      for (int v : b) nb.push_back(inv[v]);
      std::sort(nb.begin(), nb.end());
      mapped.push_back(nb);
    }
    std::sort(mapped.begin(), mapped.end());
    std::sort(bf.begin(), bf.end());
    ASSERT_EQ(mapped, bf);
  }
}
