#pragma once

#include <cstdint>
#include <vector>

#include "cubicsym/cyclo.hpp"

namespace cubicsym {

// Arithmetic in F_p for primes p < 2^31.
struct ModField {
  using Elem = uint64_t;
  uint64_t p;

  Elem zero() const noexcept { return 0; }
  Elem one() const noexcept { return 1; }
  bool isZero(Elem a) const noexcept { return a == 0; }
  Elem add(Elem a, Elem b) const noexcept {
    Elem s = a + b;
    return s >= p ? s - p : s;
  }
  Elem sub(Elem a, Elem b) const noexcept { return a >= b ? a - b : a + p - b; }
  Elem neg(Elem a) const noexcept { return a == 0 ? 0 : p - a; }
  Elem mul(Elem a, Elem b) const noexcept { return a * b % p; }
  Elem pow(Elem a, uint64_t e) const noexcept;
  Elem inv(Elem a) const;
};

bool isPrime(uint64_t n);

// Primes p = 1 mod n in increasing order, starting above `from`.
std::vector<uint64_t> primesCongruentOne(unsigned n, size_t count, uint64_t from = (1ULL << 30));

// Powers w^0..w^(n-1) of a primitive n-th root of unity w mod p; requires n | p - 1.
std::vector<uint64_t> rootOfUnityPowers(uint64_t p, unsigned n);

// Image of a under zeta_N -> w. Throws DomainError when p divides the denominator.
uint64_t reduceModP(const CycNum& a, uint64_t p, const std::vector<uint64_t>& wPowers);

}  // namespace cubicsym
