#include "cubicsym/forms.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <unordered_map>

#include "cubicsym/errors.hpp"
#include "cubicsym/matrix.hpp"

namespace cubicsym {

size_t ExpsHash::operator()(const Exps& e) const noexcept {
  uint64_t a, b;
  std::memcpy(&a, e.data(), 8);
  std::memcpy(&b, e.data() + 8, 8);
  uint64_t h = a * 0x9e3779b97f4a7c15ULL;
  h ^= (b + 0x632be59bd9b4e019ULL) * 0xbf58476d1ce4e5b9ULL;
  h ^= h >> 31;
  return static_cast<size_t>(h);
}

int totalDegree(const Exps& e) noexcept {
  int s = 0;
  for (auto v : e) s += v;
  return s;
}

int grevlexCmp(const Exps& a, const Exps& b) noexcept {
  int da = totalDegree(a), db = totalDegree(b);
  if (da != db) return da > db ? 1 : -1;
  for (int i = kMaxVars - 1; i >= 0; --i) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

namespace {

void enumerate(int m, int d, int pos, Exps& cur, std::vector<Exps>& out) {
  if (pos == m - 1) {
    cur[pos] = static_cast<uint8_t>(d);
    out.push_back(cur);
    cur[pos] = 0;
    return;
  }
  for (int k = d; k >= 0; --k) {
    cur[pos] = static_cast<uint8_t>(k);
    enumerate(m, d - k, pos + 1, cur, out);
  }
  cur[pos] = 0;
}

using PolyMap = std::unordered_map<Exps, CycNum, ExpsHash>;

std::vector<Term> sortedTerms(PolyMap&& map) {
  std::vector<Term> out;
  out.reserve(map.size());
  for (auto& [e, c] : map) {
    if (!c.isZero()) out.emplace_back(e, std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const Term& x, const Term& y) { return grevlexCmp(x.first, y.first) > 0; });
  return out;
}

std::vector<Term> mulPoly(const std::vector<Term>& p, const std::vector<Term>& q) {
  PolyMap acc;
  for (const auto& [ea, ca] : p) {
    for (const auto& [eb, cb] : q) {
      Exps e;
      for (int i = 0; i < kMaxVars; ++i) e[i] = static_cast<uint8_t>(ea[i] + eb[i]);
      CycNum prod = ca * cb;
      auto it = acc.find(e);
      if (it == acc.end()) {
        acc.emplace(e, std::move(prod));
      } else {
        it->second += prod;
      }
    }
  }
  return sortedTerms(std::move(acc));
}

std::vector<Term> addPoly(const std::vector<Term>& p, const std::vector<Term>& q, bool negate) {
  PolyMap acc;
  for (const auto& [e, c] : p) acc.emplace(e, c);
  for (const auto& [e, c] : q) {
    CycNum v = negate ? -c : c;
    auto it = acc.find(e);
    if (it == acc.end()) {
      acc.emplace(e, std::move(v));
    } else {
      it->second += v;
    }
  }
  return sortedTerms(std::move(acc));
}

// Recursive-descent parser for polynomial expressions.
class ExprParser {
 public:
  ExprParser(std::string_view s, int m, unsigned n) : s_(s), m_(m), n_(n) {}

  std::vector<Term> parseAll() {
    auto p = parseExpr();
    skipSpace();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError(what + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }
  void skipSpace() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skipSpace();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  long long readInt() {
    skipSpace();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    if (pos_ - start > 18) fail("integer literal too long");
    return std::stoll(std::string(s_.substr(start, pos_ - start)));
  }
  std::vector<Term> constant(const CycNum& c) {
    if (c.isZero()) return {};
    return {Term(Exps{}, c)};
  }
  std::vector<Term> parseExpr() {
    std::vector<Term> acc;
    bool neg = false;
    if (peek('+')) {
      ++pos_;
    } else if (peek('-')) {
      ++pos_;
      neg = true;
    }
    acc = addPoly({}, parseTerm(), neg);
    while (true) {
      if (peek('+')) {
        ++pos_;
        acc = addPoly(acc, parseTerm(), false);
      } else if (peek('-')) {
        ++pos_;
        acc = addPoly(acc, parseTerm(), true);
      } else {
        break;
      }
    }
    return acc;
  }
  std::vector<Term> parseTerm() {
    auto p = parseFactor();
    while (peek('*')) {
      ++pos_;
      p = mulPoly(p, parseFactor());
    }
    return p;
  }
  long long readExponent() {
    if (peek('^')) {
      ++pos_;
      bool neg = false;
      if (peek('-')) {
        ++pos_;
        neg = true;
      }
      long long k = readInt();
      return neg ? -k : k;
    }
    return 1;
  }
  std::vector<Term> parseFactor() {
    skipSpace();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      auto p = parseExpr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      long long k = readExponent();
      if (k < 0) fail("negative exponent on a sum");
      std::vector<Term> r = constant(CycNum::one(n_));
      for (long long i = 0; i < k; ++i) r = mulPoly(r, p);
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long long num = readInt();
      long long den = 1;
      if (peek('/')) {
        ++pos_;
        den = readInt();
        if (den == 0) fail("zero denominator");
      }
      return constant(CycNum::rational(Int(num), Int(den), n_));
    }
    if (c == 'z') {
      ++pos_;
      return constant(CycNum::zeta(n_, readExponent()));
    }
    if (c == 'x') {
      ++pos_;
      long long i = readInt();
      if (i < 1 || i > m_) fail("variable index out of range");
      long long k = readExponent();
      if (k < 0 || k > 255) fail("bad variable exponent");
      Exps e{};
      e[i - 1] = static_cast<uint8_t>(k);
      return {Term(e, CycNum::one(n_))};
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  size_t pos_ = 0;
  int m_;
  unsigned n_;
};

}  // namespace

std::vector<Exps> monomials(int m, int d) {
  if (m < 1 || m > kMaxVars) throw InputError("number of variables out of range");
  if (d < 0 || d > 255) throw InputError("degree out of range");
  std::vector<Exps> out;
  Exps cur{};
  enumerate(m, d, 0, cur, out);
  std::sort(out.begin(), out.end(), GrevlexGreater());
  return out;
}

size_t monomialCount(int m, int d) {
  size_t r = 1;
  for (int i = 1; i <= d; ++i) r = r * static_cast<size_t>(m - 1 + i) / static_cast<size_t>(i);
  return r;
}

std::string monomialString(const Exps& e, int m) {
  std::string s;
  for (int i = 0; i < m; ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += "x" + std::to_string(i + 1);
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

Form::Form(int m, int d, unsigned n) : m_(m), d_(d), n_(n) {
  if (m < 1 || m > kMaxVars) throw InputError("number of variables must be in [1, 16]");
  if (d < 0 || d > 255) throw InputError("degree out of range");
  CycContext::get(n);
}

Form Form::fromTerms(int m, int d, unsigned n, std::vector<Term> terms) {
  Form f(m, d, n);
  PolyMap acc;
  for (auto& [e, c] : terms) {
    if (totalDegree(e) != d) throw InputError("term " + monomialString(e, kMaxVars) + " is not of degree " + std::to_string(d));
    for (int i = m; i < kMaxVars; ++i) {
      if (e[i] != 0) throw InputError("term uses a variable beyond x" + std::to_string(m));
    }
    if (c.conductor() != n) throw DomainError("coefficient conductor differs from form conductor");
    auto it = acc.find(e);
    if (it == acc.end()) {
      acc.emplace(e, std::move(c));
    } else {
      it->second += c;
    }
  }
  f.terms_ = sortedTerms(std::move(acc));
  return f;
}

Form Form::monomial(int m, const Exps& e, const CycNum& c) {
  return fromTerms(m, totalDegree(e), c.conductor(), {Term(e, c)});
}

Form Form::parse(std::string_view expr, int m, unsigned n) {
  ExprParser p(expr, m, n);
  auto terms = p.parseAll();
  if (terms.empty()) throw InputError("expression is zero: '" + std::string(expr) + "'");
  int d = totalDegree(terms.front().first);
  return fromTerms(m, d, n, std::move(terms));
}

Form Form::fermat(int m, int d, unsigned n) {
  std::vector<Term> t;
  for (int i = 0; i < m; ++i) {
    Exps e{};
    e[i] = static_cast<uint8_t>(d);
    t.emplace_back(e, CycNum::one(n));
  }
  return fromTerms(m, d, n, std::move(t));
}

CycNum Form::coeff(const Exps& e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, const Exps& x) { return grevlexCmp(t.first, x) > 0; });
  if (it != terms_.end() && it->first == e) return it->second;
  return CycNum::zero(n_);
}

Form Form::operator-() const {
  Form r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

namespace {
void checkCompatible(const Form& a, const Form& b) {
  if (a.nvars() != b.nvars() || a.degree() != b.degree()) throw InputError("forms differ in variables or degree");
  if (a.conductor() != b.conductor()) throw DomainError("forms differ in conductor");
}
}  // namespace

Form operator+(const Form& a, const Form& b) {
  checkCompatible(a, b);
  Form r(a.m_, a.d_, a.n_);
  r.terms_ = addPoly(a.terms_, b.terms_, false);
  return r;
}

Form operator-(const Form& a, const Form& b) {
  checkCompatible(a, b);
  Form r(a.m_, a.d_, a.n_);
  r.terms_ = addPoly(a.terms_, b.terms_, true);
  return r;
}

Form Form::scaled(const CycNum& c) const {
  if (c.conductor() != n_) throw DomainError("scalar conductor differs from form conductor");
  Form r(m_, d_, n_);
  if (c.isZero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& [e, v] : terms_) r.terms_.emplace_back(e, v * c);
  return r;
}

bool operator==(const Form& a, const Form& b) {
  if (a.m_ != b.m_ || a.d_ != b.d_ || a.n_ != b.n_ || a.terms_.size() != b.terms_.size()) return false;
  for (size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].first != b.terms_[i].first || a.terms_[i].second != b.terms_[i].second) return false;
  }
  return true;
}

Form Form::embedded(unsigned m) const {
  Form r(m_, d_, m);
  r.terms_.reserve(terms_.size());
  for (const auto& [e, c] : terms_) r.terms_.emplace_back(e, embed(c, m));
  return r;
}

Form Form::widened(int m) const {
  if (m < m_) throw InputError("cannot narrow a form");
  Form r(m, d_, n_);
  r.terms_ = terms_;
  return r;
}

CycNum Form::evaluate(const std::vector<CycNum>& x) const {
  if (static_cast<int>(x.size()) != m_) throw InputError("point has wrong dimension");
  std::vector<std::vector<CycNum>> pw(m_);
  for (int i = 0; i < m_; ++i) {
    pw[i].push_back(CycNum::one(n_));
    for (int k = 1; k <= d_; ++k) pw[i].push_back(pw[i].back() * x[i]);
  }
  CycNum s = CycNum::zero(n_);
  for (const auto& [e, c] : terms_) {
    CycNum t = c;
    for (int i = 0; i < m_ && !t.isZero(); ++i) {
      if (e[i]) t *= pw[i][e[i]];
    }
    s += t;
  }
  return s;
}

Form Form::partial(int i) const {
  if (i < 0 || i >= m_) throw InputError("variable index out of range");
  Form r(m_, d_ > 0 ? d_ - 1 : 0, n_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exps f = e;
    f[i] -= 1;
    r.terms_.emplace_back(f, c.scaled(Int(static_cast<int>(e[i]))));
  }
  // Decrementing one coordinate preserves the grevlex order among survivors
  // only up to ties, so re-sort.
  std::sort(r.terms_.begin(), r.terms_.end(), [](const Term& x, const Term& y) { return grevlexCmp(x.first, y.first) > 0; });
  return r;
}

std::string Form::pretty() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (size_t k = 0; k < terms_.size(); ++k) {
    const auto& [e, c] = terms_[k];
    if (k) s += " + ";
    std::string mono = monomialString(e, m_);
    if (c.isOne()) {
      s += mono;
    } else if (mono == "1") {
      s += "(" + c.pretty() + ")";
    } else {
      s += "(" + c.pretty() + ")*" + mono;
    }
  }
  return s;
}

Form apply(const CycMatrix& a, const Form& f) {
  int m = f.nvars();
  if (a.rows() != m || a.cols() != m) throw InputError("matrix dimension does not match form");
  if (a.conductor() != f.conductor()) throw DomainError("matrix conductor differs from form conductor");
  // lin[i] = sum_j A(i,j) x_j; pw[i][k] = lin[i]^k, filled lazily.
  std::vector<std::vector<std::vector<Term>>> pw(m);
  auto power = [&](int i, int k) -> const std::vector<Term>& {
    auto& v = pw[i];
    if (v.empty()) {
      v.push_back({Term(Exps{}, CycNum::one(f.conductor()))});
      std::vector<Term> lin;
      for (int j = m - 1; j >= 0; --j) {
        if (a(i, j).isZero()) continue;
        Exps e{};
        e[j] = 1;
        lin.emplace_back(e, a(i, j));
      }
      v.push_back(std::move(lin));
    }
    while (static_cast<int>(v.size()) <= k) v.push_back(mulPoly(v.back(), v[1]));
    return v[k];
  };
  PolyMap acc;
  for (const auto& [e, c] : f.terms()) {
    std::vector<Term> prod{Term(Exps{}, c)};
    for (int i = 0; i < m; ++i) {
      if (e[i]) prod = mulPoly(prod, power(i, e[i]));
    }
    for (auto& [ee, cc] : prod) {
      auto it = acc.find(ee);
      if (it == acc.end()) {
        acc.emplace(ee, std::move(cc));
      } else {
        it->second += cc;
      }
    }
  }
  return Form::fromTerms(m, f.degree(), f.conductor(), sortedTerms(std::move(acc)));
}

std::optional<CycNum> semiInvarianceFactor(const CycMatrix& a, const Form& f) {
  if (f.isZero()) throw InputError("semi-invariance factor of the zero form is undefined");
  Form g = apply(a, f);
  if (g.size() != f.size()) return std::nullopt;
  const auto& [e0, c0] = f.terms().front();
  CycNum lambda = g.coeff(e0) * c0.inv();
  if (lambda.isZero()) return std::nullopt;
  if (g != f.scaled(lambda)) return std::nullopt;
  return lambda;
}

Form hat(const Form& f) {
  int m = f.nvars() + 1;
  if (m > kMaxVars) throw InputError("too many variables for hat");
  std::vector<Term> terms = f.terms();
  Exps e{};
  e[m - 1] = static_cast<uint8_t>(f.degree());
  terms.emplace_back(e, CycNum::one(f.conductor()));
  return Form::fromTerms(m, f.degree(), f.conductor(), std::move(terms));
}

}  // namespace cubicsym
