#include "cubicsym/cyclo.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "cubicsym/errors.hpp"

namespace cubicsym {

__extension__ typedef unsigned __int128 u128;

namespace {

using IPoly = std::vector<int64_t>;

// Exact quotient of a by a monic b (both lowest degree first).
IPoly divMonic(IPoly a, const IPoly& b) {
  size_t db = b.size() - 1;
  if (a.size() < b.size()) return {0};
  IPoly q(a.size() - db, 0);
  for (size_t k = a.size(); k-- > db;) {
    int64_t c = a[k];
    q[k - db] = c;
    if (c == 0) continue;
    for (size_t j = 0; j <= db; ++j) a[k - db + j] -= c * b[j];
  }
  return q;
}

IPoly cyclotomicPoly(unsigned n, std::unordered_map<unsigned, IPoly>& memo) {
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  IPoly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d == 0) p = divMonic(p, cyclotomicPoly(d, memo));
  }
  memo[n] = p;
  return p;
}

void checkSame(const CycNum& a, const CycNum& b) {
  if (a.conductor() != b.conductor()) {
    throw DomainError("conductor mismatch: " + std::to_string(a.conductor()) + " vs " +
                      std::to_string(b.conductor()));
  }
}

// Dense polynomial over Q, lowest degree first, no trailing zeros (zero = empty).
using QPoly = std::vector<mpq_class>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// p mod q and p div q for q nonzero.
std::pair<QPoly, QPoly> divmodQ(QPoly p, const QPoly& q) {
  trim(p);
  QPoly quo;
  if (p.size() < q.size()) return {quo, p};
  quo.assign(p.size() - q.size() + 1, 0);
  const mpq_class& lead = q.back();
  size_t dq = q.size() - 1;
  for (size_t k = p.size() - 1;; --k) {
    if (p[k] != 0) {
      mpq_class c = p[k] / lead;
      quo[k - dq] = c;
      for (size_t j = 0; j <= dq; ++j) p[k - dq + j] -= c * q[j];
    }
    if (k == dq) break;
  }
  trim(p);
  trim(quo);
  return {quo, p};
}

QPoly mulQ(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

QPoly subQ(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

CycNum fromQPoly(const CycContext& ctx, const QPoly& p) {
  mpz_class den = 1;
  for (const auto& c : p) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Int> coeffs(p.size());
  for (size_t i = 0; i < p.size(); ++i) {
    mpz_class v = p[i].get_num() * (den / p[i].get_den());
    coeffs[i] = Int(v);
  }
  return CycNum::fromDense(ctx, std::move(coeffs), Int(den));
}

}  // namespace

CycContext::CycContext(unsigned n) : n_(n) {
  std::unordered_map<unsigned, IPoly> memo;
  phiPoly_ = cyclotomicPoly(n, memo);
  phi_ = static_cast<unsigned>(phiPoly_.size() - 1);
  powers_.resize(n);
  IPoly cur(phi_, 0);
  cur[0] = 1;
  for (unsigned e = 0; e < n; ++e) {
    Sparse s;
    for (unsigned i = 0; i < phi_; ++i) {
      if (cur[i] != 0) s.emplace_back(i, cur[i]);
    }
    powers_[e] = std::move(s);
    // cur *= x, then reduce x^phi.
    int64_t top = cur[phi_ - 1];
    for (unsigned i = phi_ - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0) {
      for (unsigned i = 0; i < phi_; ++i) cur[i] -= top * phiPoly_[i];
    }
  }
}

const CycContext& CycContext::get(unsigned n) {
  if (n == 0) throw InputError("conductor must be positive");
  static std::mutex mu;
  static std::unordered_map<unsigned, std::unique_ptr<CycContext>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto it = registry.find(n);
  if (it != registry.end()) return *it->second;
  auto* ctx = new CycContext(n);
  registry.emplace(n, std::unique_ptr<CycContext>(ctx));
  return *ctx;
}

unsigned eulerPhi(unsigned n) {
  unsigned r = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      r -= r / p;
    }
  }
  if (n > 1) r -= r / n;
  return r;
}

unsigned lcmConductor(unsigned a, unsigned b) { return std::lcm(a, b); }

void CycNum::normalize() {
  terms_.erase(std::remove_if(terms_.begin(), terms_.end(), [](const Term& t) { return t.c.isZero(); }),
               terms_.end());
  if (terms_.empty()) {
    den_ = Int(1);
    return;
  }
  if (den_.sign() < 0) {
    den_ = -den_;
    for (auto& t : terms_) t.c = -t.c;
  }
  if (den_.isOne()) return;
  Int g = den_;
  for (const auto& t : terms_) {
    g = gcd(g, t.c);
    if (g.isOne()) return;
  }
  den_ = divExact(den_, g);
  for (auto& t : terms_) t.c = divExact(t.c, g);
}

CycNum CycNum::fromDense(const CycContext& ctx, std::vector<Int> coeffs, Int den) {
  if (den.isZero()) throw DomainError("zero denominator");
  // Entries past phi are reduced through the power table.
  if (coeffs.size() > ctx.phi()) {
    std::vector<Int> red(ctx.phi());
    for (size_t i = 0; i < coeffs.size(); ++i) {
      if (coeffs[i].isZero()) continue;
      if (i < ctx.phi()) {
        red[i] += coeffs[i];
        continue;
      }
      for (const auto& [e, c] : ctx.power(static_cast<unsigned>(i % ctx.n()))) red[e].addMul(coeffs[i], Int(static_cast<long long>(c)));
    }
    coeffs = std::move(red);
  }
  CycNum r(ctx);
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (!coeffs[i].isZero()) r.terms_.push_back({static_cast<uint32_t>(i), std::move(coeffs[i])});
  }
  r.den_ = std::move(den);
  r.normalize();
  return r;
}

CycNum CycNum::fromInt(const Int& v, unsigned n) {
  CycNum r(CycContext::get(n));
  if (!v.isZero()) r.terms_.push_back({0, v});
  return r;
}

CycNum CycNum::rational(const Int& num, const Int& den, unsigned n) {
  if (den.isZero()) throw DomainError("zero denominator");
  CycNum r(CycContext::get(n));
  if (!num.isZero()) r.terms_.push_back({0, num});
  r.den_ = den;
  r.normalize();
  return r;
}

CycNum CycNum::rational(const mpq_class& q, unsigned n) {
  return rational(Int(q.get_num()), Int(q.get_den()), n);
}

CycNum CycNum::zeta(unsigned n, long long k) {
  const CycContext& ctx = CycContext::get(n);
  long long e = k % static_cast<long long>(n);
  if (e < 0) e += n;
  CycNum r(ctx);
  for (const auto& [i, c] : ctx.power(static_cast<unsigned>(e))) r.terms_.push_back({i, Int(static_cast<long long>(c))});
  return r;
}

CycNum CycNum::reduce(const std::map<long long, mpq_class>& raw, unsigned n) {
  const CycContext& ctx = CycContext::get(n);
  mpz_class den = 1;
  for (const auto& [e, q] : raw) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Int> dense(ctx.phi());
  for (const auto& [e, q] : raw) {
    if (q == 0) continue;
    long long r = e % static_cast<long long>(n);
    if (r < 0) r += n;
    Int c(mpz_class(q.get_num() * (den / q.get_den())));
    for (const auto& [i, pc] : ctx.power(static_cast<unsigned>(r))) dense[i].addMul(c, Int(static_cast<long long>(pc)));
  }
  return fromDense(ctx, std::move(dense), Int(den));
}

std::vector<mpq_class> CycNum::coeffs() const {
  std::vector<mpq_class> out(ctx_->phi(), 0);
  mpz_class d = den_.mpz();
  for (const auto& t : terms_) {
    out[t.e] = mpq_class(t.c.mpz(), d);
    out[t.e].canonicalize();
  }
  return out;
}

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (auto& t : r.terms_) t.c = -t.c;
  return r;
}

CycNum CycNum::scaled(const Int& k) const {
  if (k.isZero()) return CycNum(*ctx_);
  CycNum r = *this;
  for (auto& t : r.terms_) t.c *= k;
  r.normalize();
  return r;
}

CycNum& CycNum::operator+=(const CycNum& o) {
  checkSame(*this, o);
  if (o.isZero()) return *this;
  if (isZero()) {
    terms_ = o.terms_;
    den_ = o.den_;
    return *this;
  }
  Int ma(1), mb(1);
  if (den_ != o.den_) {
    Int g = gcd(den_, o.den_);
    ma = divExact(o.den_, g);
    mb = divExact(den_, g);
    den_ *= ma;
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].e < o.terms_[j].e)) {
      Term t = std::move(terms_[i++]);
      if (!ma.isOne()) t.c *= ma;
      out.push_back(std::move(t));
    } else if (i == terms_.size() || o.terms_[j].e < terms_[i].e) {
      Term t{o.terms_[j].e, o.terms_[j].c};
      if (!mb.isOne()) t.c *= mb;
      out.push_back(std::move(t));
      ++j;
    } else {
      Term t = std::move(terms_[i++]);
      if (!ma.isOne()) t.c *= ma;
      t.c.addMul(o.terms_[j].c, mb);
      ++j;
      if (!t.c.isZero()) out.push_back(std::move(t));
    }
  }
  terms_ = std::move(out);
  normalize();
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) { return *this += -o; }

CycNum operator*(const CycNum& a, const CycNum& b) {
  checkSame(a, b);
  const CycContext& ctx = *a.ctx_;
  if (a.isZero() || b.isZero()) return CycNum(ctx);
  if (a.isRational() && a.den_.isOne()) return b.scaled(a.terms_[0].c);
  if (b.isRational() && b.den_.isOne()) return a.scaled(b.terms_[0].c);
  unsigned phi = ctx.phi();
  thread_local std::vector<Int> buf;
  buf.assign(2 * phi - 1, Int());
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) buf[ta.e + tb.e].addMul(ta.c, tb.c);
  }
  const auto& poly = ctx.cyclotomic();
  for (size_t k = buf.size(); k-- > phi;) {
    if (buf[k].isZero()) continue;
    Int c = std::move(buf[k]);
    buf[k] = Int();
    for (unsigned j = 0; j < phi; ++j) {
      if (poly[j] != 0) buf[k - phi + j].subMul(c, Int(static_cast<long long>(poly[j])));
    }
  }
  CycNum r(ctx);
  for (unsigned i = 0; i < phi; ++i) {
    if (!buf[i].isZero()) r.terms_.push_back({i, std::move(buf[i])});
  }
  r.den_ = a.den_ * b.den_;
  r.normalize();
  return r;
}

CycNum& CycNum::operator*=(const CycNum& o) {
  *this = *this * o;
  return *this;
}

CycNum CycNum::inv() const {
  if (isZero()) throw DomainError("inverse of zero");
  const CycContext& ctx = *ctx_;
  if (terms_.size() == 1) {
    // (c zeta^e / d)^-1 = d zeta^(N-e) / c
    CycNum r = zeta(ctx.n(), -static_cast<long long>(terms_[0].e));
    for (auto& t : r.terms_) t.c *= den_;
    r.den_ = terms_[0].c;
    r.normalize();
    return r;
  }
  QPoly a(ctx.phi(), 0);
  for (const auto& t : terms_) a[t.e] = mpq_class(t.c.mpz(), den_.mpz());
  for (auto& c : a) c.canonicalize();
  trim(a);
  QPoly r0(ctx.cyclotomic().begin(), ctx.cyclotomic().end());
  for (auto& c : r0) c.canonicalize();
  QPoly r1 = a;
  QPoly s0, s1{mpq_class(1)};
  // Invariant: s_i * a = r_i mod Phi_N.
  while (r1.size() > 1) {
    auto [q, r] = divmodQ(r0, r1);
    QPoly s2 = subQ(s0, mulQ(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.empty()) throw DomainError("element is not invertible");
  mpq_class c = r1[0];
  for (auto& v : s1) v /= c;
  auto [unused, red] = divmodQ(s1, QPoly(ctx.cyclotomic().begin(), ctx.cyclotomic().end()));
  (void)unused;
  return fromQPoly(ctx, red);
}

CycNum CycNum::pow(long long k) const {
  if (k < 0) return inv().pow(-k);
  CycNum base = *this;
  CycNum r = one(conductor());
  while (k > 0) {
    if (k & 1) r *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return r;
}

bool operator==(const CycNum& a, const CycNum& b) {
  if (a.conductor() != b.conductor()) return false;
  if (a.terms_.size() != b.terms_.size() || a.den_ != b.den_) return false;
  for (size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].e != b.terms_[i].e || a.terms_[i].c != b.terms_[i].c) return false;
  }
  return true;
}

size_t CycNum::hash() const noexcept {
  size_t h = std::hash<unsigned>()(conductor()) ^ (den_.hash() * 0x9e3779b97f4a7c15ULL);
  for (const auto& t : terms_) {
    h ^= (t.c.hash() + t.e * 0x100000001b3ULL) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::string CycNum::encode() const {
  std::string s = std::to_string(conductor()) + " " + den_.str();
  size_t k = 0;
  for (unsigned i = 0; i < ctx_->phi(); ++i) {
    s += ' ';
    if (k < terms_.size() && terms_[k].e == i) {
      s += terms_[k++].c.str();
    } else {
      s += '0';
    }
  }
  return s;
}

CycNum CycNum::decode(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string tok;
  std::vector<std::string> toks;
  while (in >> tok) toks.push_back(tok);
  if (toks.size() < 3) throw InputError("malformed cyclotomic encoding '" + std::string(text) + "'");
  Int n = Int::parse(toks[0]);
  if (!n.isSmall() || n.small() <= 0 || n.small() > 100000) {
    throw InputError("conductor out of range in '" + std::string(text) + "'");
  }
  const CycContext& ctx = CycContext::get(static_cast<unsigned>(n.small()));
  Int d = Int::parse(toks[1]);
  if (d.sign() <= 0) throw InputError("denominator must be positive in '" + std::string(text) + "'");
  if (toks.size() != 2 + ctx.phi()) {
    throw InputError("expected " + std::to_string(ctx.phi()) + " coefficients for conductor " +
                     toks[0] + " in '" + std::string(text) + "'");
  }
  std::vector<Int> coeffs;
  coeffs.reserve(ctx.phi());
  for (size_t i = 2; i < toks.size(); ++i) coeffs.push_back(Int::parse(toks[i]));
  return fromDense(ctx, std::move(coeffs), std::move(d));
}

std::complex<double> CycNum::approx() const {
  std::complex<double> s = 0;
  double tau = 2.0 * M_PI / conductor();
  for (const auto& t : terms_) {
    double c = t.c.mpz().get_d();
    s += c * std::polar(1.0, tau * t.e);
  }
  return s / den_.mpz().get_d();
}

std::string CycNum::pretty() const {
  if (isZero()) return "0";
  std::string num;
  for (size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    std::string c = t.c.str();
    bool neg = c[0] == '-';
    if (neg) c.erase(0, 1);
    if (i == 0) {
      if (neg) num += "-";
    } else {
      num += neg ? " - " : " + ";
    }
    if (t.e == 0) {
      num += c;
    } else {
      if (c != "1") num += c + "*";
      num += t.e == 1 ? "z" : "z^" + std::to_string(t.e);
    }
  }
  if (den_.isOne()) return num;
  return "(" + num + ")/" + den_.str();
}

uint64_t CycNum::modp(uint64_t p, const std::vector<uint64_t>& wPowers) const {
  uint64_t d = den_.mod(p);
  if (d == 0) throw DomainError("prime divides denominator");
  u128 s = 0;
  for (const auto& t : terms_) {
    s += static_cast<u128>(t.c.mod(p)) * wPowers[t.e];
    s %= p;
  }
  // d^(p-2) mod p
  u128 inv = 1, b = d;
  uint64_t e = p - 2;
  while (e) {
    if (e & 1) inv = inv * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<uint64_t>(s * inv % p);
}

CycNum embed(const CycNum& a, unsigned m) {
  unsigned n = a.conductor();
  if (m % n != 0) {
    throw DomainError("cannot embed conductor " + std::to_string(n) + " into " + std::to_string(m));
  }
  if (m == n) return a;
  const CycContext& ctx = CycContext::get(m);
  unsigned step = m / n;
  std::vector<Int> dense(ctx.phi());
  for (const auto& t : a.terms_) {
    for (const auto& [i, c] : ctx.power((t.e * step) % m)) dense[i].addMul(t.c, Int(static_cast<long long>(c)));
  }
  return CycNum::fromDense(ctx, std::move(dense), a.den_);
}

}  // namespace cubicsym
