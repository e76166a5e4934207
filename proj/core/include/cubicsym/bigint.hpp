#pragma once

#include <cstdint>
#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cubicsym {

// Arbitrary-precision integer. Values that fit in int64 live inline; larger
// values spill to GMP. Invariant: the big representation is used only when
// the value does not fit in int64, so equality is representation equality.
class Int {
 public:
  Int() noexcept = default;
  Int(long long v) noexcept : small_(static_cast<int64_t>(v)) {}  // NOLINT(implicit)
  Int(long v) noexcept : small_(static_cast<int64_t>(v)) {}       // NOLINT(implicit)
  Int(int v) noexcept : small_(v) {}                              // NOLINT(implicit)
  explicit Int(const mpz_class& v);

  Int(const Int& o) : small_(o.small_), big_(o.big_ ? std::make_unique<mpz_class>(*o.big_) : nullptr) {}
  Int(Int&&) noexcept = default;
  Int& operator=(const Int& o);
  Int& operator=(Int&&) noexcept = default;
  ~Int() = default;

  static Int parse(std::string_view text);
  std::string str() const;
  mpz_class mpz() const;

  bool isSmall() const noexcept { return !big_; }
  int64_t small() const noexcept { return small_; }
  bool isZero() const noexcept { return !big_ && small_ == 0; }
  bool isOne() const noexcept { return !big_ && small_ == 1; }
  int sign() const noexcept;

  // Residue in [0, p) for an odd prime p < 2^62.
  uint64_t mod(uint64_t p) const;
  size_t hash() const noexcept;

  Int operator-() const;
  Int& operator+=(const Int& o);
  Int& operator-=(const Int& o);
  Int& operator*=(const Int& o);
  // this += a * b
  void addMul(const Int& a, const Int& b);
  void subMul(const Int& a, const Int& b);

  friend Int operator+(Int a, const Int& b) { return a += b; }
  friend Int operator-(Int a, const Int& b) { return a -= b; }
  friend Int operator*(Int a, const Int& b) { return a *= b; }

  friend bool operator==(const Int& a, const Int& b) noexcept;
  friend bool operator!=(const Int& a, const Int& b) noexcept { return !(a == b); }
  friend int cmp(const Int& a, const Int& b);
  friend bool operator<(const Int& a, const Int& b) { return cmp(a, b) < 0; }

  // Exact division; b must divide a.
  friend Int divExact(const Int& a, const Int& b);
  friend Int gcd(const Int& a, const Int& b);
  friend Int abs(const Int& a);

 private:
  void normalize();
  void setBig(mpz_class v);

  int64_t small_ = 0;
  std::unique_ptr<mpz_class> big_;
};

}  // namespace cubicsym
