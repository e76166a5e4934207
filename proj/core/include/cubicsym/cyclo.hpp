#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "cubicsym/bigint.hpp"

namespace cubicsym {

// Immutable per-conductor data for Q(zeta_N) = Q[x]/Phi_N. Instances are
// interned for the lifetime of the process and shared by every CycNum.
class CycContext {
 public:
  using Sparse = std::vector<std::pair<uint32_t, int64_t>>;

  static const CycContext& get(unsigned n);

  unsigned n() const noexcept { return n_; }
  unsigned phi() const noexcept { return phi_; }
  // Phi_N, monic, length phi + 1, lowest degree first.
  const std::vector<int64_t>& cyclotomic() const noexcept { return phiPoly_; }
  // zeta^e reduced modulo Phi_N for 0 <= e < N.
  const Sparse& power(unsigned e) const { return powers_[e]; }

  CycContext(const CycContext&) = delete;
  CycContext& operator=(const CycContext&) = delete;

 private:
  explicit CycContext(unsigned n);

  unsigned n_;
  unsigned phi_;
  std::vector<int64_t> phiPoly_;
  std::vector<Sparse> powers_;
};

// Exact element (sum c_e zeta_N^e) / den of Q(zeta_N), canonical:
// exponents < phi(N) strictly increasing, coefficients nonzero,
// den > 0 and gcd(den, c_e...) = 1. Zero has no terms and den = 1.
class CycNum {
 public:
  struct Term {
    uint32_t e;
    Int c;
  };

  CycNum() : CycNum(CycContext::get(1)) {}
  explicit CycNum(const CycContext& ctx) : ctx_(&ctx), den_(1) {}

  static CycNum zero(unsigned n) { return CycNum(CycContext::get(n)); }
  static CycNum one(unsigned n) { return fromInt(1, n); }
  static CycNum fromInt(const Int& v, unsigned n = 1);
  static CycNum rational(const Int& num, const Int& den, unsigned n = 1);
  static CycNum rational(const mpq_class& q, unsigned n = 1);
  // zeta_n^k; k may be negative.
  static CycNum zeta(unsigned n, long long k = 1);
  // Canonical value of sum q_e zeta_N^e; exponents are reduced mod N.
  static CycNum reduce(const std::map<long long, mpq_class>& raw, unsigned n);
  // Build from a dense coefficient vector of length <= phi with common denominator.
  static CycNum fromDense(const CycContext& ctx, std::vector<Int> coeffs, Int den);

  unsigned conductor() const noexcept { return ctx_->n(); }
  const CycContext& context() const noexcept { return *ctx_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  const Int& den() const noexcept { return den_; }

  bool isZero() const noexcept { return terms_.empty(); }
  bool isOne() const noexcept { return terms_.size() == 1 && terms_[0].e == 0 && terms_[0].c.isOne() && den_.isOne(); }
  bool isRational() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].e == 0); }
  // Dense rational coordinates, length phi(N).
  std::vector<mpq_class> coeffs() const;

  CycNum operator-() const;
  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(const CycNum& a, const CycNum& b);
  CycNum scaled(const Int& k) const;

  // Multiplicative inverse; throws DomainError on zero.
  CycNum inv() const;
  CycNum pow(long long k) const;

  friend bool operator==(const CycNum& a, const CycNum& b);
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }
  size_t hash() const noexcept;

  // "N d c0 c1 ... c_{phi-1}"
  std::string encode() const;
  static CycNum decode(std::string_view text);
  std::complex<double> approx() const;
  // Human-readable, e.g. "(1 - 2*z^3)/5" with z = zeta_N.
  std::string pretty() const;

  // Residue modulo a prime p, given a primitive N-th root of unity w mod p.
  // Throws DomainError if p divides the denominator.
  uint64_t modp(uint64_t p, const std::vector<uint64_t>& wPowers) const;

 private:
  friend CycNum embed(const CycNum& a, unsigned m);
  void normalize();

  const CycContext* ctx_;
  std::vector<Term> terms_;
  Int den_;
};

// Same value viewed in Q(zeta_M); M must be a multiple of the conductor.
CycNum embed(const CycNum& a, unsigned m);

unsigned lcmConductor(unsigned a, unsigned b);

unsigned eulerPhi(unsigned n);

struct CycNumHash {
  size_t operator()(const CycNum& a) const noexcept { return a.hash(); }
};

}  // namespace cubicsym
