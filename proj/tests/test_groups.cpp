#include <gtest/gtest.h>

#include "cubicsym/errors.hpp"
#include "cubicsym/groups.hpp"
#include "support.hpp"

using namespace cubicsym;
using namespace testsupport;

namespace {

CycMatrix cycle7() { return CycMatrix::permutation({1, 2, 3, 4, 5, 6, 0}, 1); }

CycMatrix zeta3Scalar(int m) { return CycMatrix::scalar(m, CycNum::zeta(3)); }

std::pair<Form, MatGroup> example(const std::string& stem) {
  Form f = loadForm(corpusPath(stem + ".form"));
  GroupFile gf = loadGroup(corpusPath(stem + ".group"));
  return {f, MatGroup::closure(gf.gens)};
}

}  // namespace

TEST(Groups, ScalarClosure) {
  MatGroup g = MatGroup::closure({zeta3Scalar(7)});
  EXPECT_EQ(g.order(), 3u);
  EXPECT_EQ(scalarSubgroupOrder(g), 3u);
  EXPECT_EQ(projectiveOrder(g), 1u);
}

TEST(Groups, KleinGroupOrder) {
  auto [f, g] = example("fivefolds/X20");
  EXPECT_EQ(g.order(), 301u);
  EXPECT_EQ(projectiveOrder(g), 301u);
  std::vector<CycMatrix> lifted = g.generators();
  lifted.push_back(zeta3Scalar(7).embedded(g.conductor() * 3));
  MatGroup withScalars = MatGroup::closure(lifted);
  EXPECT_EQ(withScalars.order(), 903u);
  EXPECT_EQ(scalarSubgroupOrder(withScalars), 3u);
  EXPECT_EQ(projectiveOrder(withScalars), 301u);
}

TEST(Groups, PrintedMatricesGiveOrder144) {
  auto [f, g] = example("fivefolds/X17");
  EXPECT_EQ(g.order(), 144u);
}

TEST(Groups, CapExceededReportsPartial) {
  GroupFile gf = loadGroup(corpusPath("fivefolds/X20.group"));
  try {
    MatGroup::closure(gf.gens, 50);
    FAIL() << "expected CapExceeded";
  } catch (const CapExceeded& e) {
    // Raised on the first new element once cap elements are held.
    EXPECT_EQ(e.partial(), 50u);
    EXPECT_NE(std::string(e.what()).find("cap 50"), std::string::npos);
  }
}

TEST(Groups, CoverGroupContainsScalars) {
  GroupFile gf = loadGroup(corpusPath("extra/m96.group"));
  std::vector<CycMatrix> gens = gf.gens;
  gens.push_back(zeta3Scalar(7).embedded(gf.conductor));
  MatGroup g = MatGroup::closure(gens);
  EXPECT_EQ(scalarSubgroupOrder(g) % 3, 0u);
}

TEST(Groups, PermutationGroupHasNoScalars) {
  MatGroup g = MatGroup::closure({cycle7(), CycMatrix::permutation({1, 0, 2, 3, 4, 5, 6}, 1)});
  EXPECT_EQ(g.order(), 5040u);
  EXPECT_EQ(scalarSubgroupOrder(g), 1u);
  EXPECT_EQ(projectiveOrder(g), g.order());
}

TEST(Groups, Predicates) {
  EXPECT_TRUE(isSemiPermutation(cycle7()));
  const unsigned n = 12;
  CycMatrix fourier(3, 3, n);
  CycNum s = embed(CycNum::zeta(3).scaled(2) + CycNum::one(3), n);  // sqrt(-3)
  CycNum c = s.inv();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) fourier(i, j) = embed(CycNum::zeta(3, i * j), n) * c;
  EXPECT_FALSE(isSemiPermutation(fourier));
  EXPECT_TRUE(isAbelian(MatGroup({cycle7()})));
  EXPECT_FALSE(isAbelian(MatGroup({cycle7(), CycMatrix::permutation({1, 0, 2, 3, 4, 5, 6}, 1)})));

  auto em = eigenMultiset(diagZeta({{3, 1}, {3, 1}, {1, 0}, {1, 0}, {1, 0}, {1, 0}, {1, 0}}, 3));
  ASSERT_EQ(em.mult.size(), 2u);
  EXPECT_EQ(em.mult[0], std::make_pair(RootOfUnity{0, 1}, 5));
  EXPECT_EQ(em.mult[1], std::make_pair(RootOfUnity{1, 3}, 2));

  auto cyc = eigenMultiset(cycle7());
  EXPECT_EQ(cyc.mult.size(), 7u);
}

TEST(Groups, Special) {
  MatGroup bad = MatGroup::closure({diagZeta({{3, 1}, {3, 1}, {1, 0}, {1, 0}, {1, 0}, {1, 0}, {1, 0}}, 3)});
  EXPECT_FALSE(isSpecial(bad));
  EXPECT_TRUE(isSpecial(MatGroup::closure({cycle7()})));
  EXPECT_TRUE(isSpecial(MatGroup::closure({CycMatrix::identity(7, 1)})));
}

TEST(Groups, PackRoundTrip) {
  std::mt19937 rng(2);
  for (int t = 0; t < 20; ++t) {
    CycMatrix a = randomInvertible(rng, 4, 12);
    EXPECT_EQ(unpackMatrix(packMatrix(a), 4, 12), a);
  }
}

TEST(Groups, RejectsBadGenerators) {
  EXPECT_THROW(MatGroup(std::vector<CycMatrix>{}), InputError);
  EXPECT_THROW(MatGroup({CycMatrix::identity(2, 1), CycMatrix::identity(3, 1)}), InputError);
  EXPECT_THROW(MatGroup({CycMatrix(2, 2, 1)}), InputError);
}

TEST(GroupsProperty, ClosureIsGeneratorOrderIndependent) {
  GroupFile gf = loadGroup(corpusPath("fivefolds/X5.group"));
  MatGroup a = MatGroup::closure(gf.gens);
  std::vector<CycMatrix> other(gf.gens.rbegin(), gf.gens.rend());
  // Replacing a generator by its product with another generates the same group.
  other[0] = other[0] * other[1];
  MatGroup b = MatGroup::closure(other);
  ASSERT_EQ(a.order(), b.order());
  for (size_t i = 0; i < b.order(); ++i) ASSERT_TRUE(a.contains(b.element(i)));
}

TEST(GroupsProperty, ClosureIsClosedAndInverseClosed) {
  auto [f, g] = example("fivefolds/X17");
  std::mt19937 rng(4);
  std::uniform_int_distribution<size_t> pick(0, g.order() - 1);
  for (int t = 0; t < 50; ++t) {
    CycMatrix a = g.element(pick(rng)), b = g.element(pick(rng));
    ASSERT_TRUE(g.contains(a * b));
    ASSERT_TRUE(g.contains(a.inverse()));
  }
  EXPECT_TRUE(g.contains(CycMatrix::identity(7, g.conductor())));
}

TEST(GroupsProperty, ShippedGroupsFixTheirForms) {
  for (const char* stem : {"fivefolds/X20", "fivefolds/X17", "fivefolds/X10", "fivefolds/X19", "fourfolds/X9p"}) {
    auto [f, g] = example(stem);
    unsigned n = lcmConductor(g.conductor(), f.conductor());
    Form fl = f.embedded(n);
    bool all = true;
    g.forEach([&](const CycMatrix& a) { all = all && apply(a.embedded(n), fl) == fl; });
    EXPECT_TRUE(all) << stem;
  }
}

TEST(GroupsProperty, ScalarAdjunctionMultipliesOrderByThree) {
  for (const char* stem : {"fivefolds/X10", "fivefolds/X19", "fivefolds/X17"}) {
    GroupFile gf = loadGroup(corpusPath(std::string(stem) + ".group"));
    MatGroup g = MatGroup::closure(gf.gens);
    ASSERT_EQ(scalarSubgroupOrder(g), 1u);
    std::vector<CycMatrix> gens = gf.gens;
    gens.push_back(zeta3Scalar(7).embedded(lcmConductor(gf.conductor, 3)));
    EXPECT_EQ(MatGroup::closure(gens).order(), 3 * g.order()) << stem;
  }
}
