#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cubicsym/cyclo.hpp"
#include "cubicsym/forms.hpp"

namespace cubicsym {

// Support-level certificates: x_i^2 x_j absent for all j; F in (x_p,x_q,x_r);
// F in (x_p,x_q)+(x_r,x_s)^2; F in (x_p)+(x_q,x_r,x_s,x_t)^2; a (V1,V2,V3)
// cover of the monomials. JacobianZero records a common zero of the partials
// or a Groebner basis that misses a pure power.
enum class WitnessKind {
  MissingSquareTerm,
  ThreeVariableIdeal,
  TwoPlusSquareIdeal,
  OnePlusSquareIdeal,
  PartitionCover,
  JacobianZero
};

// Stable serialized names: L38-i, L38-ii, L38-iii, L38-iv, L310, JacobianZero.
std::string kindName(WitnessKind k);

struct NonSmoothWitness {
  WitnessKind kind = WitnessKind::JacobianZero;
  // 0-based variables in the order they appear in the condition.
  std::vector<int> vars;
  // PartitionCover sets, 0-based.
  std::vector<int> v1, v2, v3;
  // JacobianZero: an explicit common zero when one is known.
  std::optional<std::vector<CycNum>> point;
  std::string detail;

  std::string describe() const;
};

// Monomial support of a form.
std::vector<Exps> support(const Form& f);

// Scans the four conditions in order on the monomial support. Conditions
// (ii)-(iv) are applied only when m >= 7, where the singular point they
// produce is guaranteed by a dimension count.
std::optional<NonSmoothWitness> combinatorialNonSmooth(const std::vector<Exps>& supp, int m);
std::optional<NonSmoothWitness> combinatorialNonSmooth(const Form& f);

// True iff every monomial fits one of the three patterns. Throws InputError
// unless the sets are disjoint, cover all variables, and |V1| > |V2|.
bool partitionNonSmooth(const std::vector<Exps>& supp, int m, const std::vector<int>& v1, const std::vector<int>& v2,
                        const std::vector<int>& v3);
bool partitionNonSmooth(const Form& f, const std::vector<int>& v1, const std::vector<int>& v2,
                        const std::vector<int>& v3);

// Exhaustive scan over all 3^m covers with |V1| > |V2|; first hit in a fixed order.
std::optional<NonSmoothWitness> findPartitionCover(const std::vector<Exps>& supp, int m);

// True iff the witness condition holds for the support of f.
bool replayWitness(const Form& f, const NonSmoothWitness& w);

// Common zero of all partials among nonzero points with coordinates in
// {0, 1}, or {0, 1, zeta_3, zeta_3^2} when withCubeRoots is set.
std::optional<std::vector<CycNum>> findSmallCommonZero(const Form& f, bool withCubeRoots = false);

enum class SmoothStatus { Smooth, Singular, Exhausted };

struct SmoothOptions {
  size_t budget = 1000000;
  // Skip the modular certificate and decide with exact arithmetic only.
  bool exactOnly = false;
  int modularPrimes = 3;
  // When false, a form the modular stage cannot certify is reported as
  // Exhausted instead of running the exact engine.
  bool exactFallback = true;
};

struct SmoothResult {
  SmoothStatus status = SmoothStatus::Exhausted;
  std::optional<NonSmoothWitness> witness;
  // Which stage decided: "support-witness", "point-search", "modular-groebner", "exact-groebner".
  std::string method;
  size_t reductions = 0;
};

// Jacobian criterion. Smooth is certified by a Groebner basis of the partials
// whose leading monomials include a pure power of every variable, either over
// F_p (p = 1 mod N, zeta_N mapped to a root of unity) or over Q(zeta_N).
SmoothResult isSmooth(const Form& f, const SmoothOptions& opt = {});

std::string statusName(SmoothStatus s);

}  // namespace cubicsym
