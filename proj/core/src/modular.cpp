#include "cubicsym/modular.hpp"

#include "cubicsym/errors.hpp"

namespace cubicsym {

__extension__ typedef unsigned __int128 u128;

ModField::Elem ModField::pow(Elem a, uint64_t e) const noexcept {
  Elem r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

ModField::Elem ModField::inv(Elem a) const {
  if (a == 0) throw DomainError("inverse of zero mod p");
  return pow(a, p - 2);
}

namespace {

uint64_t powmod(uint64_t a, uint64_t e, uint64_t m) {
  u128 r = 1, b = a % m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return static_cast<uint64_t>(r);
}

std::vector<unsigned> primeFactors(unsigned n) {
  std::vector<unsigned> f;
  for (unsigned q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      f.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) f.push_back(n);
  return f;
}

}  // namespace

bool isPrime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic for n < 3.3 * 10^24.
  for (uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = static_cast<uint64_t>(static_cast<u128>(x) * x % n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<uint64_t> primesCongruentOne(unsigned n, size_t count, uint64_t from) {
  std::vector<uint64_t> out;
  uint64_t step = n % 2 == 0 ? n : 2ULL * n;  // keep p odd
  uint64_t p = from - from % step + 1;
  if (p <= from) p += step;
  while (out.size() < count) {
    if (isPrime(p)) out.push_back(p);
    p += step;
  }
  return out;
}

std::vector<uint64_t> rootOfUnityPowers(uint64_t p, unsigned n) {
  if ((p - 1) % n != 0) throw DomainError("n does not divide p - 1");
  auto qs = primeFactors(n);
  uint64_t w = 0;
  for (uint64_t a = 2; a < p; ++a) {
    uint64_t c = powmod(a, (p - 1) / n, p);
    bool primitive = true;
    for (unsigned q : qs) {
      if (powmod(c, n / q, p) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      w = c;
      break;
    }
  }
  if (w == 0) throw DomainError("no primitive root of unity found");
  std::vector<uint64_t> pw(n);
  pw[0] = 1;
  for (unsigned i = 1; i < n; ++i) pw[i] = static_cast<uint64_t>(static_cast<u128>(pw[i - 1]) * w % p);
  return pw;
}

uint64_t reduceModP(const CycNum& a, uint64_t p, const std::vector<uint64_t>& wPowers) { return a.modp(p, wPowers); }

}  // namespace cubicsym
