#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "cubicsym/diffrank.hpp"
#include "cubicsym/errors.hpp"
#include "cubicsym/reps.hpp"
#include "cubicsym/smooth.hpp"
#include "support.hpp"

using namespace cubicsym;
using namespace testsupport;

namespace {

// Column multisets of size m over the characters of spec, in lexicographic order.
void multisets(size_t chars, int m, size_t from, std::vector<size_t>& cur, std::vector<std::vector<size_t>>& out) {
  if (static_cast<int>(cur.size()) == m) {
    out.push_back(cur);
    return;
  }
  for (size_t c = from; c < chars; ++c) {
    cur.push_back(c);
    multisets(chars, m, c, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<size_t>> admissibleColumnSets(const AbelianGroupSpec& spec, int m) {
  std::vector<std::vector<size_t>> all, out;
  std::vector<size_t> cur;
  multisets(spec.order(), m, 0, cur, all);
  for (auto& cols : all) {
    if (isFaithful(spec, cols) && isProjectivelyFaithful(spec, cols)) out.push_back(cols);
  }
  return out;
}

std::set<std::vector<uint32_t>> permuted(const DiagonalSubgroup& g, const std::vector<int>& perm) {
  std::set<std::vector<uint32_t>> s;
  for (const auto& e : g.elements) {
    std::vector<uint32_t> p(e.size());
    for (size_t i = 0; i < e.size(); ++i) p[i] = e[perm[i]];
    s.insert(p);
  }
  return s;
}

// Same diagonal subgroup up to a coordinate permutation, by trying every permutation.
bool bruteForceEquivalent(const DiagonalSubgroup& a, const DiagonalSubgroup& b) {
  if (a.modulus != b.modulus || a.elements.size() != b.elements.size()) return false;
  std::vector<int> perm(a.m);
  std::iota(perm.begin(), perm.end(), 0);
  std::set<std::vector<uint32_t>> target(b.elements.begin(), b.elements.end());
  do {
    if (permuted(a, perm) == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

RepClass classFromExponents(unsigned n, const std::vector<unsigned>& exps) {
  AbelianGroupSpec spec({n});
  return makeRepClass(spec, 3, std::vector<size_t>(exps.begin(), exps.end()));
}

const RepVerdict* onlyAccepted(const std::vector<RepVerdict>& vs) {
  const RepVerdict* hit = nullptr;
  for (const auto& v : vs) {
    if (v.status == VerdictStatus::Accepted) {
      if (hit) return nullptr;
      hit = &v;
    }
  }
  return hit;
}

}  // namespace

TEST(Reps, AbelianSpec) {
  AbelianGroupSpec s = AbelianGroupSpec::fromCyclicOrders({9, 5});
  EXPECT_EQ(s.factors(), std::vector<unsigned>{45});
  EXPECT_EQ(s.str(), "C45");
  AbelianGroupSpec t = AbelianGroupSpec::fromCyclicOrders({6, 4, 1});
  EXPECT_EQ(t.factors(), (std::vector<unsigned>{2, 12}));
  EXPECT_EQ(t.order(), 24u);
  EXPECT_EQ(t.exponent(), 12u);
  for (size_t i = 0; i < t.order(); ++i) EXPECT_EQ(t.index(t.digits(i)), i);
  EXPECT_THROW(AbelianGroupSpec({4, 6}), InputError);
  EXPECT_EQ(AbelianGroupSpec::fromCyclicOrders({7}).elementOrder(1), 7u);
}

TEST(Reps, CyclicTwoCounts) {
  auto e = enumerateDiagonalReps(AbelianGroupSpec({2}), 7, 3);
  EXPECT_EQ(e.candidates, 6u);
  EXPECT_EQ(e.classes.size(), 6u);
  EXPECT_FALSE(e.pruned);
  auto verdicts = filterToNdReps(e.classes, 5, 3);
  int accepted = 0;
  for (const auto& v : verdicts) {
    int signs = 0;
    for (unsigned x : v.cls.expMatrix[0]) signs += x != 0;
    if (v.status == VerdictStatus::Accepted) {
      ++accepted;
      EXPECT_LE(signs, 3);
      ASSERT_TRUE(v.witness);
      EXPECT_TRUE(checkWitness(v.cls, *v.witness));
    } else {
      EXPECT_EQ(v.status, VerdictStatus::RejectedNonSmooth);
      EXPECT_GE(signs, 4);
      ASSERT_TRUE(v.nonSmooth);
      EXPECT_EQ(v.nonSmooth->kind, WitnessKind::ThreeVariableIdeal);
    }
  }
  EXPECT_EQ(accepted, 3);
}

TEST(Reps, CyclicThreeOnOneCoordinateHasNoClasses) {
  EXPECT_TRUE(enumerateDiagonalReps(AbelianGroupSpec({3}), 1, 3).classes.empty());
}

TEST(Reps, CyclicSevenAndElevenRegressions) {
  auto c7 = enumerateDiagonalReps(AbelianGroupSpec({7}), 7, 3);
  auto v7 = filterToNdReps(c7.classes, 5, 3);
  ASSERT_NE(onlyAccepted(v7), nullptr);

  auto c11 = enumerateDiagonalReps(AbelianGroupSpec({11}), 7, 3);
  auto v11 = filterToNdReps(c11.classes, 5, 3);
  const RepVerdict* hit = onlyAccepted(v11);
  ASSERT_NE(hit, nullptr);
  EXPECT_EQ(hit->cls.canonical, classFromExponents(11, {9, 5, 4, 3, 1, 0, 0}).canonical);
  for (const auto& v : v11) EXPECT_NE(v.status, VerdictStatus::Undecided);
  std::vector<size_t> sizes;
  for (const auto& b : supportPartition(hit->support, 7).blocks) sizes.push_back(b.size());
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<size_t>{2, 5}));
}

TEST(Reps, NineByFiveRegression) {
  auto e = enumerateDiagonalReps(AbelianGroupSpec::fromCyclicOrders({9, 5}), 7, 3);
  auto v = filterToNdReps(e.classes, 5, 3);
  const RepVerdict* hit = onlyAccepted(v);
  ASSERT_NE(hit, nullptr);
  // A = diag(xi_9^(1,7,4), 1^4), B = diag(1^3, xi_5^(1,3,4,2)); AB generates C45.
  std::vector<unsigned> ab = {5, 35, 20, 9, 27, 36, 18};
  EXPECT_EQ(hit->cls.canonical, classFromExponents(45, ab).canonical);
  std::vector<size_t> sizes;
  for (const auto& b : supportPartition(hit->support, 7).blocks) sizes.push_back(b.size());
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<size_t>{3, 4}));
}

TEST(Reps, SevenByTwoForcedMonomialTrace) {
  auto c7 = enumerateDiagonalReps(AbelianGroupSpec({7}), 7, 3);
  auto verdicts = filterToNdReps(c7.classes, 5, 3);
  const RepVerdict* hit = onlyAccepted(verdicts);
  ASSERT_NE(hit, nullptr);
  auto forced = forcedMonomials(invariantSupport(hit->cls), 7);
  EXPECT_EQ(forced.size(), 7u);
  auto ext = cyclicExtensionsFixing(forced, 7, 2);
  ASSERT_EQ(ext.size(), 1u);
  EXPECT_EQ(ext[0], std::vector<unsigned>(7, 0));
}

TEST(Reps, SevenByTwoHasNoAcceptedClass) {
  auto e = enumerateDiagonalReps(AbelianGroupSpec::fromCyclicOrders({7, 2}), 7, 3);
  auto v = filterToNdReps(e.classes, 5, 3);
  for (const auto& r : v) EXPECT_NE(r.status, VerdictStatus::Accepted) << r.cls.str();
}

TEST(Reps, CanonicalExamples) {
  RepClass a = classFromExponents(7, {0, 1, 2, 3, 4, 5, 6});
  RepClass b = classFromExponents(7, {6, 5, 4, 3, 2, 1, 0});
  EXPECT_EQ(a.canonical, b.canonical);
  RepClass s1 = classFromExponents(2, {1, 0, 0, 0, 0, 0, 0});
  RepClass s2 = classFromExponents(2, {1, 1, 0, 0, 0, 0, 0});
  EXPECT_NE(s1.canonical, s2.canonical);
  RepClass c11 = classFromExponents(11, {9, 5, 4, 3, 1, 0, 0});
  for (unsigned k = 2; k < 11; ++k) {
    std::vector<unsigned> scaled;
    for (unsigned e : {9u, 5u, 4u, 3u, 1u, 0u, 0u}) scaled.push_back(e * k % 11);
    EXPECT_EQ(classFromExponents(11, scaled).canonical, c11.canonical) << k;
  }
  EXPECT_EQ(canonicalize(c11), c11.canonical);
}

TEST(Reps, RejectsUnfaithfulColumns) {
  AbelianGroupSpec c4({4});
  EXPECT_FALSE(isFaithful(c4, {2, 2, 0}));
  EXPECT_TRUE(isFaithful(c4, {1, 0, 0}));
  AbelianGroupSpec c3({3});
  EXPECT_FALSE(isProjectivelyFaithful(c3, {1, 1, 1}));
  EXPECT_TRUE(isProjectivelyFaithful(c3, {1, 1, 0}));
}

TEST(RepsProperty, CanonicalEqualityMatchesBruteForceConjugacy) {
  const std::vector<std::pair<std::vector<unsigned>, int>> cases = {
      {{2}, 4}, {{3}, 3}, {{4}, 4}, {{6}, 3}, {{2, 2}, 3}, {{3, 3}, 3}, {{2, 4}, 3}, {{9}, 3},
  };
  size_t pairs = 0, equal = 0;
  for (const auto& [factors, m] : cases) {
    AbelianGroupSpec spec(factors);
    auto sets = admissibleColumnSets(spec, m);
    std::vector<RepClass> classes;
    for (const auto& cols : sets) classes.push_back(makeRepClass(spec, 3, cols));
    for (size_t i = 0; i < classes.size(); ++i) {
      for (size_t j = i; j < classes.size(); ++j) {
        bool codes = classes[i].canonical == classes[j].canonical;
        bool brute = bruteForceEquivalent(classes[i].subgroupWithScalars(), classes[j].subgroupWithScalars());
        ASSERT_EQ(codes, brute) << classes[i].str() << " vs " << classes[j].str();
        ++pairs;
        equal += codes;
      }
    }
  }
  EXPECT_GT(pairs, 1000u);
  EXPECT_GT(equal, 100u);
}

TEST(RepsProperty, EnumerationKeepsOneRepresentativePerClass) {
  AbelianGroupSpec spec({6});
  auto e = enumerateDiagonalReps(spec, 4, 3);
  std::set<CanonicalCode> seen;
  for (const auto& c : e.classes) EXPECT_TRUE(seen.insert(c.canonical).second);
  for (const auto& cols : admissibleColumnSets(spec, 4)) EXPECT_TRUE(seen.count(makeRepClass(spec, 3, cols).canonical));
}

TEST(RepsProperty, AcceptedWitnessesAreInvariantAndSmooth) {
  for (unsigned n : {2u, 7u}) {
    auto e = enumerateDiagonalReps(AbelianGroupSpec({n}), 7, 3);
    for (const auto& v : filterToNdReps(e.classes, 5, 3)) {
      if (v.status != VerdictStatus::Accepted) continue;
      ASSERT_TRUE(v.witness);
      for (const auto& g : v.cls.generators()) {
        unsigned k = lcmConductor(g.conductor(), v.witness->conductor());
        ASSERT_EQ(apply(g.embedded(k), v.witness->embedded(k)), v.witness->embedded(k));
      }
      EXPECT_EQ(isSmooth(*v.witness).status, SmoothStatus::Smooth);
    }
  }
}

TEST(RepsProperty, RestrictionToCyclicSubgroupsKeepsWitness) {
  RepClass c45 = classFromExponents(45, {5, 35, 20, 9, 27, 36, 18});
  auto v = filterToNdReps({c45}, 5, 3);
  ASSERT_EQ(v.size(), 1u);
  ASSERT_EQ(v[0].status, VerdictStatus::Accepted);
  const Form& w = *v[0].witness;
  for (size_t g : {3u, 5u, 9u, 15u}) {
    RepClass r = restrictToCyclic(c45, g);
    EXPECT_TRUE(checkWitness(r, w)) << "subgroup generated by " << g;
    auto rv = filterToNdReps({r}, 5, 3);
    EXPECT_EQ(rv[0].status, VerdictStatus::Accepted) << r.str();
  }
}

TEST(RepsProperty, VerdictsAreThreadCountIndependent) {
  auto e = enumerateDiagonalReps(AbelianGroupSpec({7}), 7, 3);
  FilterOptions one, four;
  four.threads = 4;
  auto a = filterToNdReps(e.classes, 5, 3, one), b = filterToNdReps(e.classes, 5, 3, four);
  ASSERT_EQ(a.size(), b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].status, b[i].status);
    EXPECT_EQ(a[i].method, b[i].method);
    if (a[i].witness) EXPECT_EQ(*a[i].witness, *b[i].witness);
  }
}
