#pragma once

#include <cstddef>
#include <deque>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "cubicsym/matrix.hpp"

namespace cubicsym {

constexpr size_t kDefaultClosureCap = 300000;

// Finite subgroup of GL(m, Q(zeta_N)) given by generators; the element set is
// materialized by closure(). Elements are stored in a compact exact encoding.
class MatGroup {
 public:
  // Generators are lifted to their common conductor. Throws InputError on an
  // empty list, mismatched dimensions, or a singular generator.
  explicit MatGroup(std::vector<CycMatrix> gens);
  MatGroup(const MatGroup& o);
  MatGroup& operator=(const MatGroup& o);
  MatGroup(MatGroup&&) noexcept = default;
  MatGroup& operator=(MatGroup&&) noexcept = default;

  // Breadth-first product closure from the identity. Throws CapExceeded.
  static MatGroup closure(std::vector<CycMatrix> gens, size_t cap = kDefaultClosureCap);
  void materialize(size_t cap = kDefaultClosureCap);

  int dim() const noexcept { return m_; }
  unsigned conductor() const noexcept { return n_; }
  const std::vector<CycMatrix>& generators() const noexcept { return gens_; }

  bool materialized() const noexcept { return materialized_; }
  // Requires materialization.
  size_t order() const;
  CycMatrix element(size_t i) const;
  bool contains(const CycMatrix& a) const;
  void forEach(const std::function<void(const CycMatrix&)>& fn) const;

 private:
  int m_;
  unsigned n_;
  std::vector<CycMatrix> gens_;
  bool materialized_ = false;
  std::deque<std::string> packed_;
  // Views into packed_; deque growth and moves keep them valid.
  std::unordered_set<std::string_view> index_;
};

std::string packMatrix(const CycMatrix& a);
CycMatrix unpackMatrix(std::string_view s, int m, unsigned n);

// |G n scalars|
size_t scalarSubgroupOrder(const MatGroup& g);
// |G| / |G n scalars|
size_t projectiveOrder(const MatGroup& g);

bool isSemiPermutation(const CycMatrix& a);
// Every element is a semi-permutation matrix (requires materialization).
bool isSemiPermutation(const MatGroup& g);
// Generators pairwise commute.
bool isAbelian(const MatGroup& g);

// Eigenvalue exp(2 pi i num / den) with gcd(num, den) = 1 and 0 <= num < den.
struct RootOfUnity {
  unsigned num = 0;
  unsigned den = 1;
  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
  friend auto operator<=>(const RootOfUnity&, const RootOfUnity&) = default;
};

struct EigenMultiset {
  // Sorted by root; multiplicities are positive and sum to m.
  std::vector<std::pair<RootOfUnity, int>> mult;
  std::string str() const;
  friend bool operator==(const EigenMultiset&, const EigenMultiset&) = default;
};

// Eigenvalue multiset of a finite-order matrix. Throws DomainError above the order cap.
EigenMultiset eigenMultiset(const CycMatrix& a, long long orderCap = 10000);
std::vector<EigenMultiset> eigenMultisets(const MatGroup& g);

// (k, m - k) when A is similar to zeta_3^a diag(zeta_3 I_k, I_{m-k}) with
// k in {2, 3} and a in {0, 1, 2}. Throws DomainError above the order cap.
std::optional<std::pair<int, int>> cubeRootEigenShape(const CycMatrix& a, long long orderCap = 10000);

// No element has one of the two forbidden zeta_3 eigenvalue shapes.
// Requires dimension 7 and materialization.
bool isSpecial(const MatGroup& g);

}  // namespace cubicsym
