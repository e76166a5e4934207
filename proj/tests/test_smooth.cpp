#include <gtest/gtest.h>

#include "cubicsym/smooth.hpp"
#include "support.hpp"

using namespace cubicsym;
using namespace testsupport;

TEST(Smooth, CombinatorialMissingCubeTerm) {
  Form f = Form::fermat(6, 3).widened(7);
  auto w = combinatorialNonSmooth(f);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->kind, WitnessKind::MissingSquareTerm);
  ASSERT_FALSE(w->vars.empty());
  EXPECT_EQ(w->vars[0], 6);
  EXPECT_TRUE(replayWitness(f, *w));
  EXPECT_FALSE(combinatorialNonSmooth(Form::fermat(7, 3)));
}

TEST(Smooth, CombinatorialIdealCondition) {
  // x1 x6 x7 plus a quadratic in x2..x5 times a linear form: F in (x1) + (x2,...,x5)^2.
  Form f = Form::parse(
      "x1*x6*x7 + x1^2*x2 + x1*x6^2 + x1*x7^2 + x2^2*x6 + x3^2*x7 + x4^2*x6 + x5^2*x7 + x2^2*x3 + x3^2*x4 + "
      "x4^2*x5 + x5^2*x2 + x2*x5*x6 + x3*x4*x7",
      7, 1);
  auto w = combinatorialNonSmooth(f);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->kind, WitnessKind::OnePlusSquareIdeal) << w->describe();
  EXPECT_TRUE(replayWitness(f, *w));
  SmoothResult r = isSmooth(f);
  EXPECT_NE(r.status, SmoothStatus::Smooth);
}

TEST(Smooth, PartitionCover) {
  Form single = Form::parse("x1*x2*x3", 7, 1);
  EXPECT_TRUE(partitionNonSmooth(single, {0, 1, 3, 4, 5, 6}, {2}, {}));
  Form fermat = Form::fermat(7, 3);
  EXPECT_FALSE(partitionNonSmooth(fermat, {0, 1, 3, 4, 5, 6}, {2}, {}));
  EXPECT_FALSE(partitionNonSmooth(fermat, {0, 1, 2, 3}, {4, 5, 6}, {}));
  EXPECT_FALSE(findPartitionCover(support(fermat), 7));
}

TEST(Smooth, MonomialAndCoverWitnessesAgreeOnSingularForm) {
  // x2 occurs only in x2*x3^2, so e2 is a singular point.
  Form f = Form::parse("x1^3 + x1*x6*x7 + x4*x5^2 + x6^3 + x7^3 + x3*x4^2 + x2*x3^2", 7, 1);
  auto w = combinatorialNonSmooth(f);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->kind, WitnessKind::MissingSquareTerm);
  EXPECT_EQ(w->vars, std::vector<int>{1});
  auto cover = findPartitionCover(support(f), 7);
  ASSERT_TRUE(cover);
  EXPECT_TRUE(replayWitness(f, *cover));
  EXPECT_EQ(isSmooth(f).status, SmoothStatus::Singular);
}

TEST(Smooth, DecidesFermatAndKlein) {
  EXPECT_EQ(isSmooth(Form::fermat(7, 3)).status, SmoothStatus::Smooth);
  Form klein = Form::parse("x1^2*x2 + x2^2*x3 + x3^2*x4 + x4^2*x5 + x5^2*x6 + x6^2*x7 + x7^2*x1", 7, 1);
  EXPECT_EQ(isSmooth(klein).status, SmoothStatus::Smooth);
  SmoothOptions exact;
  exact.exactOnly = true;
  EXPECT_EQ(isSmooth(Form::fermat(4, 3), exact).status, SmoothStatus::Smooth);
}

TEST(Smooth, DetectsSingularPoint) {
  Form f = Form::parse("x1^3 + x2^3", 3, 1);
  SmoothResult r = isSmooth(f);
  ASSERT_EQ(r.status, SmoothStatus::Singular);
  ASSERT_TRUE(r.witness);
  auto z = findSmallCommonZero(f);
  ASSERT_TRUE(z);
  for (int i = 0; i < 3; ++i) EXPECT_TRUE(f.partial(i).evaluate(*z).isZero());
}

TEST(Smooth, ExhaustedIsDistinct) {
  SmoothOptions tiny;
  tiny.budget = 1;
  tiny.exactOnly = true;
  Form klein = Form::parse("x1^2*x2 + x2^2*x3 + x3^2*x4 + x4^2*x5 + x5^2*x1", 5, 1);
  EXPECT_EQ(isSmooth(klein, tiny).status, SmoothStatus::Exhausted);
}

TEST(SmoothProperty, SupportWitnessImpliesNotSmooth) {
  std::mt19937 rng(198);
  int checked = 0;
  for (int t = 0; t < 200; ++t) {
    // Sparse supports in 7 variables hit the support conditions often.
    Form f = randomForm(rng, 7, 3, 3, 0.06);
    auto w = combinatorialNonSmooth(f);
    if (!w) continue;
    ++checked;
    ASSERT_TRUE(replayWitness(f, *w));
    SmoothOptions o;
    o.budget = 20000;
    ASSERT_NE(isSmooth(f, o).status, SmoothStatus::Smooth) << f.pretty();
  }
  EXPECT_GT(checked, 100);
}

TEST(SmoothProperty, SmallPointSearchAgrees) {
  std::mt19937 rng(31);
  int found = 0;
  for (int t = 0; t < 60; ++t) {
    Form f = randomForm(rng, 3 + t % 2, 3, 3, 0.3);
    if (findSmallCommonZero(f, true)) {
      ++found;
      ASSERT_EQ(isSmooth(f).status, SmoothStatus::Singular) << f.pretty();
    }
  }
  EXPECT_GT(found, 0);
}

TEST(SmoothProperty, InvariantUnderCoordinateChange) {
  std::mt19937 rng(41);
  const Form forms[] = {
      Form::fermat(3, 3, 3),
      Form::parse("x1^3 + x2^3 + x3^3 + x1*x2*x3", 3, 3),
      Form::parse("x1^3 + x2^3", 3, 3),
      Form::parse("x1^2*x2 + x2^2*x3 + x3^2*x4 + x4^2*x1", 4, 3),
      Form::parse("x1*x2*x3 + x4^3", 4, 3),
  };
  for (const Form& f : forms) {
    SmoothStatus base = isSmooth(f).status;
    for (int t = 0; t < 4; ++t) {
      CycMatrix a = randomInvertible(rng, f.nvars(), 3);
      ASSERT_EQ(isSmooth(apply(a, f)).status, base) << f.pretty();
    }
  }
}
