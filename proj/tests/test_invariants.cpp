#include <gtest/gtest.h>

#include "cubicsym/errors.hpp"
#include "cubicsym/groups.hpp"
#include "cubicsym/invariants.hpp"
#include "support.hpp"

using namespace cubicsym;
using namespace testsupport;

namespace {

CycMatrix c11Generator() {
  return diagZeta({{11, 9}, {11, 5}, {11, 4}, {11, 3}, {11, 1}, {1, 0}, {1, 0}}, 11);
}

bool sameUpToScaling(const Form& a, const Form& b) {
  if (a.isZero() || b.isZero() || a.size() != b.size()) return false;
  CycNum r = b.terms()[0].second * a.terms()[0].second.inv();
  return a.scaled(r) == b;
}

}  // namespace

TEST(Invariants, ScalarFixesEveryCubic) {
  EXPECT_EQ(invariantForms({CycMatrix::scalar(7, CycNum::zeta(3))}, 3).dim(), 84u);
}

TEST(Invariants, CoverGroupBasis) {
  GroupFile gf = loadGroup(corpusPath("extra/m96.group"));
  InvariantSpace s = invariantForms(gf.gens, 3);
  ASSERT_EQ(s.dim(), 6u);
  const char* expected[] = {"x1^3", "x1*x6*x7", "x4*x5^2", "x6^3 + x7^3", "x3*x4^2", "x2*x3^2"};
  for (const char* e : expected) {
    Form want = Form::parse(e, 7, s.n);
    bool found = false;
    for (const Form& b : s.basis) found = found || sameUpToScaling(b, want);
    EXPECT_TRUE(found) << e;
  }
}

TEST(Invariants, CyclicElevenSupport) {
  InvariantSpace s = invariantForms({c11Generator()}, 3);
  EXPECT_EQ(s.dim(), 9u);
  for (const Form& b : s.basis) EXPECT_EQ(b.size(), 1u);
  EXPECT_TRUE(s.contains(Form::parse("x7^3 + x6*x7^2 + x1^2*x3", 7, s.n)));
  EXPECT_FALSE(s.contains(Form::parse("x1^3", 7, s.n)));
}

TEST(Invariants, ActionMatrixColumns) {
  CycMatrix swap = CycMatrix::permutation({1, 0}, 1);
  CycMatrix m = actionMatrix(swap, 2);
  auto mons = monomials(2, 2);
  ASSERT_EQ(m.rows(), 3);
  for (size_t j = 0; j < mons.size(); ++j) {
    Form image = apply(swap, Form::monomial(2, mons[j], CycNum::one(1)));
    for (size_t i = 0; i < mons.size(); ++i) EXPECT_EQ(m(i, j), image.coeff(mons[i]));
  }
}

TEST(Invariants, SymplecticExamples) {
  Form f5 = loadForm(corpusPath("fourfolds/X5p.form"));
  CycMatrix a5 = loadMatrix(corpusPath("extra/X5p_1.matrix"));
  unsigned n = lcmConductor(a5.conductor(), f5.conductor());
  SymplecticCheck c = symplecticCheck(a5.embedded(n), f5.embedded(n));
  EXPECT_FALSE(c.symplectic);
  EXPECT_TRUE(c.lambda.isOne());
  // Exponents 3 + 42 + 12 + 24 + 0 + 16 of zeta_48 sum to 1 mod 48.
  EXPECT_EQ(c.det, CycNum::zeta(48));

  Form fa7 = loadForm(corpusPath("extra/FA7.form"));
  CycMatrix a7 = loadMatrix(corpusPath("extra/A7_1.matrix"));
  unsigned m = lcmConductor(a7.conductor(), fa7.conductor());
  SymplecticCheck s = symplecticCheck(a7.embedded(m), fa7.embedded(m));
  EXPECT_TRUE(s.symplectic);
  EXPECT_TRUE(s.lambda.isOne());
  EXPECT_TRUE(s.det.isOne());
  GroupFile gens = loadGroup(corpusPath("extra/A7.group"));
  for (const auto& g : gens.gens) {
    unsigned k = lcmConductor(g.conductor(), fa7.conductor());
    EXPECT_TRUE(isSymplectic(g.embedded(k), fa7.embedded(k)));
  }

  EXPECT_TRUE(isSymplectic(CycMatrix::identity(6, 1), Form::fermat(6, 3)));
  EXPECT_THROW(symplecticCheck(CycMatrix::permutation({1, 0, 2, 3, 4, 5}, 1), Form::parse("x1^3 + x2^2*x3 + x4^3 + x5^3 + x6^3", 6, 1)),
               InputError);
}

TEST(Invariants, SymplecticOrderNeedsEvenShape) {
  MatGroup g = MatGroup::closure({CycMatrix::identity(7, 1)});
  EXPECT_THROW(symplecticOrder(g, Form::fermat(7, 3)), InputError);
}

TEST(Invariants, CoveringLift) {
  auto lift = coveringLift({CycMatrix::identity(4, 1)}, 3);
  ASSERT_EQ(lift.size(), 2u);
  MatGroup g = MatGroup::closure(lift);
  EXPECT_EQ(g.order(), 3u);
  Form h = hat(Form::fermat(4, 3)).embedded(g.conductor());
  for (const auto& a : g.generators()) EXPECT_EQ(apply(a, h), h);
}

TEST(Invariants, FLiftingCriterion) {
  EXPECT_TRUE(fLiftingExists(7, 3));
  EXPECT_FALSE(fLiftingExists(6, 3));
  EXPECT_TRUE(fLiftingExists(5, 3));
  EXPECT_THROW(fLiftingExists(3, 3), InputError);
  EXPECT_THROW(fLiftingExists(2, 5), InputError);
}

TEST(InvariantsProperty, BasisIsFixedByGenerators) {
  for (const char* stem : {"extra/m96.group", "fivefolds/X19.group", "fivefolds/X10.group", "fourfolds/X8p.group"}) {
    GroupFile gf = loadGroup(corpusPath(stem));
    InvariantSpace s = invariantForms(gf.gens, 3);
    for (const Form& b : s.basis) {
      for (const auto& a : gf.gens) ASSERT_EQ(apply(a.embedded(s.n), b), b) << stem;
    }
  }
}

TEST(InvariantsProperty, DimensionIsConjugationInvariant) {
  std::mt19937 rng(61);
  for (int t = 0; t < 8; ++t) {
    int m = 3 + t % 3;
    std::vector<int> perm(m);
    for (int i = 0; i < m; ++i) perm[i] = (i + 1) % m;
    std::vector<CycMatrix> gens = {CycMatrix::permutation(perm, 3),
                                   CycMatrix::scalar(m, CycNum::zeta(3))};
    size_t base = invariantForms(gens, 3).dim();
    CycMatrix p = randomInvertible(rng, m, 3), pinv = p.inverse();
    std::vector<CycMatrix> conj;
    for (const auto& g : gens) conj.push_back(pinv * g * p);
    ASSERT_EQ(invariantForms(conj, 3).dim(), base);
  }
}

TEST(InvariantsProperty, ReynoldsProjectionLandsInSpan) {
  for (const char* stem : {"fivefolds/X19.group", "fourfolds/X8p.group", "fivefolds/X17.group"}) {
    GroupFile gf = loadGroup(corpusPath(stem));
    MatGroup g = MatGroup::closure(gf.gens, 500);
    InvariantSpace s = invariantForms(gf.gens, 3);
    CycNum inv = CycNum::rational(1, static_cast<long>(g.order()), s.n);
    size_t rank = 0;
    for (const auto& mono : monomials(gf.m, 3)) {
      Form x = Form::monomial(gf.m, mono, CycNum::one(s.n));
      Form avg(gf.m, 3, s.n);
      g.forEach([&](const CycMatrix& a) { avg = avg + apply(a.embedded(s.n), x); });
      avg = avg.scaled(inv);
      ASSERT_TRUE(s.contains(avg)) << stem;
      if (!avg.isZero()) ++rank;
    }
    EXPECT_GE(rank, s.dim()) << stem;
  }
}

TEST(InvariantsProperty, SymplecticDataSurviveConjugation) {
  Form fa7 = loadForm(corpusPath("extra/FA7.form"));
  CycMatrix a = loadMatrix(corpusPath("extra/A7_1.matrix"));
  unsigned n = lcmConductor(a.conductor(), fa7.conductor());
  Form f = fa7.embedded(n);
  a = a.embedded(n);
  SymplecticCheck base = symplecticCheck(a, f);
  std::mt19937 rng(71);
  for (int t = 0; t < 3; ++t) {
    CycMatrix p = randomInvertible(rng, 6, n);
    // G = P^-1(F) is fixed up to lambda by P A P^-1.
    Form g = apply(p.inverse(), f);
    SymplecticCheck c = symplecticCheck(p * a * p.inverse(), g);
    EXPECT_EQ(c.lambda, base.lambda);
    EXPECT_EQ(c.det, base.det);
    EXPECT_EQ(c.symplectic, base.symplectic);
  }
}
