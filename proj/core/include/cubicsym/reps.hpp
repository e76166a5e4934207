#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cubicsym/forms.hpp"
#include "cubicsym/matrix.hpp"
#include "cubicsym/smooth.hpp"

namespace cubicsym {

// Finite abelian group Z/n_1 x ... x Z/n_k with n_1 | n_2 | ... | n_k, n_i >= 2.
// Elements and characters are both indexed by mixed-radix integers over the
// factors, first factor most significant.
class AbelianGroupSpec {
 public:
  AbelianGroupSpec() = default;
  // Throws InputError unless the divisibility chain holds.
  explicit AbelianGroupSpec(std::vector<unsigned> invariantFactors);
  // Any list of cyclic orders, e.g. {9, 5} -> invariant factors {45}.
  // Orders equal to 1 are dropped.
  static AbelianGroupSpec fromCyclicOrders(const std::vector<unsigned>& orders);

  const std::vector<unsigned>& factors() const noexcept { return n_; }
  size_t rank() const noexcept { return n_.size(); }
  size_t order() const noexcept;
  // Largest invariant factor (1 for the trivial group).
  unsigned exponent() const noexcept { return n_.empty() ? 1 : n_.back(); }

  std::vector<unsigned> digits(size_t index) const;
  size_t index(const std::vector<unsigned>& digits) const;
  // chi(g) as k / exponent() in Q/Z; returns k.
  unsigned pairing(size_t chi, size_t g) const;
  unsigned elementOrder(size_t g) const;

  std::string str() const;  // e.g. "C3xC6"
  friend bool operator==(const AbelianGroupSpec&, const AbelianGroupSpec&) = default;

 private:
  std::vector<unsigned> n_;
};

// Canonical encoding of a finite diagonal subgroup of GL(m): the modulus L
// (the group exponent) followed, for k = 1..m, by the count and the sorted
// list of distinct k-prefixes of element exponent vectors, minimized over
// column orders.
using CanonicalCode = std::vector<uint32_t>;

// Elements of a diagonal group as exponent vectors mod L.
struct DiagonalSubgroup {
  unsigned modulus = 1;
  int m = 0;
  std::vector<std::vector<uint32_t>> elements;
};

CanonicalCode canonicalizeSubgroup(const DiagonalSubgroup& d);

struct RepClass {
  AbelianGroupSpec spec;
  int m = 0;
  int d = 0;
  // expMatrix[j][c] in [0, n_j): generator j acts on coordinate c by zeta_{n_j}^{expMatrix[j][c]}.
  std::vector<std::vector<unsigned>> expMatrix;
  CanonicalCode canonical;

  // Character index of coordinate c.
  size_t column(int c) const;
  std::vector<CycMatrix> generators() const;
  // <rho(G), xi_d I> as a diagonal subgroup.
  DiagonalSubgroup subgroupWithScalars() const;
  std::string str() const;
};

RepClass makeRepClass(const AbelianGroupSpec& spec, int d, const std::vector<size_t>& columns);
CanonicalCode canonicalize(const RepClass& cls);

// The columns separate G.
bool isFaithful(const AbelianGroupSpec& spec, const std::vector<size_t>& columns);
// No nontrivial element acts as a scalar. This is stronger than missing
// <xi_d I> only by scalars outside mu_d, which fix no nonzero form of degree d.
bool isProjectivelyFaithful(const AbelianGroupSpec& spec, const std::vector<size_t>& columns);

struct EnumerateOptions {
  // Above this many column multisets, only column sets closed under
  // chi -> -(d - 1) chi are visited; the others have no invariant x_i^(d-1) x_j
  // for some i and are never smooth.
  size_t exhaustiveLimit = 2000000;
};

struct RepEnumeration {
  std::vector<RepClass> classes;
  size_t candidates = 0;  // faithful, projectively faithful multisets visited
  bool pruned = false;
};

// One representative per d-equivalence class, in order of first appearance
// among sorted column multisets (lexicographic).
RepEnumeration enumerateDiagonalReps(const AbelianGroupSpec& spec, int m, int d, const EnumerateOptions& opt = {});

// Monomials of degree d fixed by every generator.
std::vector<Exps> invariantSupport(const RepClass& cls);

enum class VerdictStatus { Accepted, RejectedNonSmooth, Undecided };
std::string verdictName(VerdictStatus s);

struct RepVerdict {
  RepClass cls;
  VerdictStatus status = VerdictStatus::Undecided;
  std::optional<Form> witness;                  // Accepted
  std::optional<NonSmoothWitness> nonSmooth;    // RejectedNonSmooth
  std::vector<Exps> support;
  int candidatesTried = 0;
  std::string method;
};

struct FilterOptions {
  int structuredCandidates = 64;
  int randomCandidates = 200;
  // Random members re-checked against a support-level rejection.
  int rejectionSamples = 20;
  size_t smoothBudget = 200000;
  unsigned threads = 1;
};

// Requires m = n + 2. Rejection uses the support-level witnesses on the full
// invariant support (cubics only); acceptance needs an explicit invariant form
// certified smooth.
std::vector<RepVerdict> filterToNdReps(const std::vector<RepClass>& classes, int n, int d,
                                       const FilterOptions& opt = {});

// F is fixed by every generator of the class and certified smooth.
bool checkWitness(const RepClass& cls, const Form& f, size_t budget = 200000);

// Restriction to the cyclic subgroup generated by element g.
RepClass restrictToCyclic(const RepClass& cls, size_t g);

// Monomials x_i^(d-1) x_j that are the only such monomial for their i in the
// support; every smooth invariant form contains them.
std::vector<Exps> forcedMonomials(const std::vector<Exps>& supp, int m);

// Characters of Z/n on the m coordinates (exponents mod n) fixing every given
// monomial, in lexicographic order.
std::vector<std::vector<unsigned>> cyclicExtensionsFixing(const std::vector<Exps>& monos, int m, unsigned n);

}  // namespace cubicsym
