#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "cubicsym/cyclo.hpp"
#include "cubicsym/forms.hpp"
#include "cubicsym/modular.hpp"

namespace cubicsym {

// Exact coefficients in Q(zeta_n).
struct CycField {
  using Elem = CycNum;
  unsigned n;

  Elem zero() const { return CycNum::zero(n); }
  Elem one() const { return CycNum::one(n); }
  bool isZero(const Elem& a) const noexcept { return a.isZero(); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const { return a.inv(); }
};

// Polynomial with terms in grevlex-descending order and nonzero coefficients.
template <class K>
struct Poly {
  std::vector<std::pair<Exps, typename K::Elem>> terms;
  int sugar = 0;

  bool isZero() const noexcept { return terms.empty(); }
  const Exps& lead() const { return terms.front().first; }
};

enum class GbStatus { Complete, Exhausted };

template <class K>
struct GbResult {
  GbStatus status = GbStatus::Complete;
  // Monic; leading monomials generate the leading ideal when Complete.
  std::vector<Poly<K>> basis;
  size_t reductions = 0;
};

// Buchberger's algorithm, grevlex, sugar selection, Gebauer-Moeller pair
// criteria, every intermediate made monic. `budget` bounds the number of
// S-polynomial reductions.
template <class K>
GbResult<K> groebnerBasis(const K& field, const std::vector<Poly<K>>& gens, size_t budget);

// Full reduction of f by a list of monic polynomials.
template <class K>
Poly<K> reduceBy(const K& field, Poly<K> f, const std::vector<Poly<K>>& basis);

Poly<CycField> toPoly(const Form& f);
// Image under zeta_N -> w mod p. Throws DomainError if p divides a denominator.
Poly<ModField> toModPoly(const Form& f, uint64_t p, const std::vector<uint64_t>& wPowers);

// Variables (0-based, < m) with no leading monomial that is a pure power of them.
template <class K>
std::vector<int> missingPurePowers(const std::vector<Poly<K>>& basis, int m);

extern template GbResult<CycField> groebnerBasis(const CycField&, const std::vector<Poly<CycField>>&, size_t);
extern template GbResult<ModField> groebnerBasis(const ModField&, const std::vector<Poly<ModField>>&, size_t);
extern template Poly<CycField> reduceBy(const CycField&, Poly<CycField>, const std::vector<Poly<CycField>>&);
extern template Poly<ModField> reduceBy(const ModField&, Poly<ModField>, const std::vector<Poly<ModField>>&);
extern template std::vector<int> missingPurePowers(const std::vector<Poly<CycField>>&, int);
extern template std::vector<int> missingPurePowers(const std::vector<Poly<ModField>>&, int);

}  // namespace cubicsym
