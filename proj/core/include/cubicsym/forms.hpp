#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cubicsym/cyclo.hpp"

namespace cubicsym {

class CycMatrix;

constexpr int kMaxVars = 16;

// Exponent vector; entries past nvars are zero.
using Exps = std::array<uint8_t, kMaxVars>;

struct ExpsHash {
  size_t operator()(const Exps& e) const noexcept;
};

int totalDegree(const Exps& e) noexcept;

// Graded reverse lexicographic comparison: -1, 0 or 1.
int grevlexCmp(const Exps& a, const Exps& b) noexcept;

struct GrevlexGreater {
  bool operator()(const Exps& a, const Exps& b) const noexcept { return grevlexCmp(a, b) > 0; }
};

// All exponent vectors of degree d in m variables, grevlex descending.
std::vector<Exps> monomials(int m, int d);

// Binomial coefficient C(m + d - 1, d).
size_t monomialCount(int m, int d);

std::string monomialString(const Exps& e, int m);

using Term = std::pair<Exps, CycNum>;

// Homogeneous form over Q(zeta_N). Terms are sorted grevlex descending and
// every stored coefficient is nonzero.
class Form {
 public:
  Form(int m, int d, unsigned n);

  // Combines duplicate exponents and drops zeros. Throws InputError on
  // inhomogeneous terms, and DomainError on a conductor mismatch.
  static Form fromTerms(int m, int d, unsigned n, std::vector<Term> terms);
  static Form monomial(int m, const Exps& e, const CycNum& c);
  // Parses expressions such as "x1^3 + 2*x1*x2^2 - z^3*x3^3" or "(1/3)*x1^2*x2",
  // where z is zeta_n. Degree is read from the terms; an empty sum is an error.
  static Form parse(std::string_view expr, int m, unsigned n);
  // x1^d + ... + xm^d
  static Form fermat(int m, int d, unsigned n = 1);

  int nvars() const noexcept { return m_; }
  int degree() const noexcept { return d_; }
  unsigned conductor() const noexcept { return n_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  size_t size() const noexcept { return terms_.size(); }
  bool isZero() const noexcept { return terms_.empty(); }

  CycNum coeff(const Exps& e) const;
  bool contains(const Exps& e) const { return !coeff(e).isZero(); }

  Form operator-() const;
  friend Form operator+(const Form& a, const Form& b);
  friend Form operator-(const Form& a, const Form& b);
  Form scaled(const CycNum& c) const;
  friend bool operator==(const Form& a, const Form& b);
  friend bool operator!=(const Form& a, const Form& b) { return !(a == b); }

  // Same form viewed at conductor M (a multiple of the current one).
  Form embedded(unsigned m) const;
  // Same form in more variables; the new variables do not occur.
  Form widened(int m) const;

  CycNum evaluate(const std::vector<CycNum>& x) const;
  // d/dx_i, a form of degree d - 1; zero when d = 0.
  Form partial(int i) const;

  std::string pretty() const;

 private:
  int m_;
  int d_;
  unsigned n_;
  std::vector<Term> terms_;
};

// A(F)(x) = F(A x) with x a column vector; (AB)(F) = B(A(F)).
Form apply(const CycMatrix& a, const Form& f);

// lambda with A(F) = lambda F, if any. Throws InputError on F = 0.
std::optional<CycNum> semiInvarianceFactor(const CycMatrix& a, const Form& f);

// F + x_{m+1}^d
Form hat(const Form& f);

}  // namespace cubicsym
