#include "cubicsym/bigint.hpp"

#include <numeric>
#include <stdexcept>

#include "cubicsym/errors.hpp"

namespace cubicsym {

namespace {

mpz_class toMpz(int64_t v) {
  mpz_class r;
  mpz_set_si(r.get_mpz_t(), static_cast<long>(v));
  return r;
}

}  // namespace

Int::Int(const mpz_class& v) { setBig(v); }

Int& Int::operator=(const Int& o) {
  if (this != &o) {
    small_ = o.small_;
    big_ = o.big_ ? std::make_unique<mpz_class>(*o.big_) : nullptr;
  }
  return *this;
}

void Int::setBig(mpz_class v) {
  if (mpz_fits_slong_p(v.get_mpz_t())) {
    small_ = mpz_get_si(v.get_mpz_t());
    big_.reset();
  } else {
    small_ = 0;
    if (big_) {
      *big_ = std::move(v);
    } else {
      big_ = std::make_unique<mpz_class>(std::move(v));
    }
  }
}

void Int::normalize() {
  if (big_ && mpz_fits_slong_p(big_->get_mpz_t())) {
    small_ = mpz_get_si(big_->get_mpz_t());
    big_.reset();
  }
}

Int Int::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw InputError("empty integer literal");
  size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw InputError("malformed integer literal '" + s + "'");
  for (size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw InputError("malformed integer literal '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  mpz_class v;
  if (v.set_str(s, 10) != 0) throw InputError("malformed integer literal '" + s + "'");
  return Int(v);
}

std::string Int::str() const { return big_ ? big_->get_str() : std::to_string(small_); }

mpz_class Int::mpz() const { return big_ ? *big_ : toMpz(small_); }

int Int::sign() const noexcept {
  if (big_) return mpz_sgn(big_->get_mpz_t());
  return (small_ > 0) - (small_ < 0);
}

uint64_t Int::mod(uint64_t p) const {
  if (!big_) {
    int64_t r = small_ % static_cast<int64_t>(p);
    return static_cast<uint64_t>(r < 0 ? r + static_cast<int64_t>(p) : r);
  }
  return mpz_fdiv_ui(big_->get_mpz_t(), p);
}

size_t Int::hash() const noexcept {
  if (!big_) return std::hash<int64_t>()(small_);
  size_t h = static_cast<size_t>(mpz_sgn(big_->get_mpz_t()));
  size_t n = mpz_size(big_->get_mpz_t());
  for (size_t i = 0; i < n; ++i) {
    h ^= mpz_getlimbn(big_->get_mpz_t(), i) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

Int Int::operator-() const {
  if (!big_ && small_ != INT64_MIN) return Int(static_cast<long long>(-small_));
  return Int(mpz_class(-mpz()));
}

Int& Int::operator+=(const Int& o) {
  if (!big_ && !o.big_) {
    int64_t r;
    if (!__builtin_add_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  setBig(mpz() + o.mpz());
  return *this;
}

Int& Int::operator-=(const Int& o) {
  if (!big_ && !o.big_) {
    int64_t r;
    if (!__builtin_sub_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  setBig(mpz() - o.mpz());
  return *this;
}

Int& Int::operator*=(const Int& o) {
  if (!big_ && !o.big_) {
    int64_t r;
    if (!__builtin_mul_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  setBig(mpz() * o.mpz());
  return *this;
}

void Int::addMul(const Int& a, const Int& b) {
  if (!big_ && !a.big_ && !b.big_) {
    int64_t p, r;
    if (!__builtin_mul_overflow(a.small_, b.small_, &p) && !__builtin_add_overflow(small_, p, &r)) {
      small_ = r;
      return;
    }
  }
  mpz_class acc = mpz();
  mpz_class am = a.mpz(), bm = b.mpz();
  mpz_addmul(acc.get_mpz_t(), am.get_mpz_t(), bm.get_mpz_t());
  setBig(std::move(acc));
}

void Int::subMul(const Int& a, const Int& b) {
  if (!big_ && !a.big_ && !b.big_) {
    int64_t p, r;
    if (!__builtin_mul_overflow(a.small_, b.small_, &p) && !__builtin_sub_overflow(small_, p, &r)) {
      small_ = r;
      return;
    }
  }
  mpz_class acc = mpz();
  mpz_class am = a.mpz(), bm = b.mpz();
  mpz_submul(acc.get_mpz_t(), am.get_mpz_t(), bm.get_mpz_t());
  setBig(std::move(acc));
}

bool operator==(const Int& a, const Int& b) noexcept {
  if (!a.big_ && !b.big_) return a.small_ == b.small_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;
}

int cmp(const Int& a, const Int& b) {
  if (!a.big_ && !b.big_) return (a.small_ > b.small_) - (a.small_ < b.small_);
  int c = mpz_cmp(a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return (c > 0) - (c < 0);
}

Int divExact(const Int& a, const Int& b) {
  if (b.isZero()) throw DomainError("division by zero");
  if (!a.big_ && !b.big_ && !(a.small_ == INT64_MIN && b.small_ == -1)) {
    return Int(static_cast<long long>(a.small_ / b.small_));
  }
  mpz_class r;
  mpz_class am = a.mpz(), bm = b.mpz();
  mpz_divexact(r.get_mpz_t(), am.get_mpz_t(), bm.get_mpz_t());
  return Int(r);
}

Int gcd(const Int& a, const Int& b) {
  if (!a.big_ && !b.big_ && a.small_ != INT64_MIN && b.small_ != INT64_MIN) {
    return Int(static_cast<long long>(std::gcd(a.small_, b.small_)));
  }
  mpz_class r;
  mpz_class am = a.mpz(), bm = b.mpz();
  mpz_gcd(r.get_mpz_t(), am.get_mpz_t(), bm.get_mpz_t());
  return Int(r);
}

Int abs(const Int& a) { return a.sign() < 0 ? -a : a; }

}  // namespace cubicsym
