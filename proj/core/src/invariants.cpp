#include "cubicsym/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "cubicsym/errors.hpp"

namespace cubicsym {

namespace {

using MonoIndex = std::unordered_map<Exps, int, ExpsHash>;

MonoIndex indexOf(const std::vector<Exps>& monos) {
  MonoIndex idx;
  for (size_t i = 0; i < monos.size(); ++i) idx.emplace(monos[i], static_cast<int>(i));
  return idx;
}

// Least o >= 1 with c^o = 1; roots of unity in Q(zeta_N) have order dividing 2N.
unsigned rootOfUnityOrder(const CycNum& c) {
  unsigned bound = 2 * c.conductor();
  CycNum p = c;
  for (unsigned o = 1; o <= bound; ++o) {
    if (p.isOne()) return o;
    p *= c;
  }
  throw DomainError("value is not a root of unity");
}

// Some root of unity mu with mu^k = c, for c a root of unity.
CycNum kthRoot(const CycNum& c, unsigned k) {
  unsigned o = rootOfUnityOrder(c);
  unsigned l = std::lcm(c.conductor(), k * o);
  CycNum cl = embed(c, l);
  for (unsigned a = 0; a < l; a += l / o) {
    if (CycNum::zeta(l, a) == cl) return CycNum::zeta(l, static_cast<long long>(a / k));
  }
  throw DomainError("root of unity not located");
}

}  // namespace

bool InvariantSpace::contains(const Form& f) const {
  if (f.isZero()) return true;
  if (f.nvars() != m || f.degree() != d) return false;
  unsigned l = std::lcm(n, f.conductor());
  auto monos = monomials(m, d);
  auto idx = indexOf(monos);
  CycMatrix mat(static_cast<int>(basis.size()) + 1, static_cast<int>(monos.size()), l);
  for (size_t r = 0; r < basis.size(); ++r) {
    for (const auto& [e, c] : basis[r].terms()) mat(static_cast<int>(r), idx.at(e)) = embed(c, l);
  }
  for (const auto& [e, c] : f.terms()) mat(static_cast<int>(basis.size()), idx.at(e)) = embed(c, l);
  return rank(std::move(mat)) == static_cast<int>(basis.size());
}

CycMatrix actionMatrix(const CycMatrix& a, int d) {
  int m = a.rows();
  auto monos = monomials(m, d);
  auto idx = indexOf(monos);
  int k = static_cast<int>(monos.size());
  CycMatrix out(k, k, a.conductor());
  CycNum one = CycNum::one(a.conductor());
  for (int j = 0; j < k; ++j) {
    Form img = apply(a, Form::monomial(m, monos[j], one));
    for (const auto& [e, c] : img.terms()) out(idx.at(e), j) = c;
  }
  return out;
}

InvariantSpace invariantForms(const std::vector<CycMatrix>& gens, int d) {
  if (gens.empty()) throw InputError("invariantForms needs at least one generator");
  int m = gens[0].rows();
  for (const auto& g : gens) {
    if (g.rows() != m || g.cols() != m) throw InputError("generators differ in dimension");
  }
  unsigned n = commonConductor(gens);
  InvariantSpace sp{m, d, n, {}};
  auto monos = monomials(m, d);
  int k = static_cast<int>(monos.size());

  bool diagonal = std::all_of(gens.begin(), gens.end(), [](const CycMatrix& g) { return g.isDiagonal(); });
  if (diagonal) {
    // Diagonal generators scale monomials, so the invariants are spanned by fixed monomials.
    CycNum one = CycNum::one(n);
    for (const auto& e : monos) {
      bool fixed = true;
      for (const auto& g0 : gens) {
        CycMatrix g = g0.embedded(n);
        CycNum s = one;
        for (int v = 0; v < m && fixed; ++v) {
          if (e[v]) s *= g(v, v).pow(e[v]);
        }
        fixed = fixed && s.isOne();
        if (!fixed) break;
      }
      if (fixed) sp.basis.push_back(Form::monomial(m, e, one));
    }
    return sp;
  }

  CycMatrix stacked(k * static_cast<int>(gens.size()), k, n);
  for (size_t g = 0; g < gens.size(); ++g) {
    CycMatrix act = actionMatrix(gens[g].embedded(n), d);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        CycNum v = act(i, j);
        if (i == j) v -= CycNum::one(n);
        stacked(static_cast<int>(g) * k + i, j) = std::move(v);
      }
    }
  }
  CycMatrix ns = nullspace(stacked);
  for (int r = 0; r < ns.rows(); ++r) {
    std::vector<Term> terms;
    for (int j = 0; j < k; ++j) {
      if (!ns(r, j).isZero()) terms.emplace_back(monos[j], ns(r, j));
    }
    sp.basis.push_back(Form::fromTerms(m, d, n, std::move(terms)));
  }
  return sp;
}

SymplecticCheck symplecticCheck(const CycMatrix& a, const Form& f) {
  unsigned n0 = std::lcm(a.conductor(), f.conductor());
  CycMatrix an = a.embedded(n0);
  Form fn = f.embedded(n0);
  auto lambda = semiInvarianceFactor(an, fn);
  if (!lambda) throw InputError("matrix does not preserve the form up to a scalar");
  auto k = an.projectiveOrder();
  if (!k) throw DomainError("matrix has no finite projective order up to the cap");
  auto c = an.pow(*k).scalarValue();
  CycNum mu = kthRoot(c->inv(), static_cast<unsigned>(*k));
  unsigned l = std::lcm(n0, mu.conductor());
  mu = embed(mu, l);
  SymplecticCheck out;
  out.mu = mu;
  out.lambda = mu.pow(f.degree()) * embed(*lambda, l);
  out.det = mu.pow(a.rows()) * embed(an.det(), l);
  out.symplectic = out.det == out.lambda * out.lambda;
  return out;
}

bool isSymplectic(const CycMatrix& a, const Form& f) { return symplecticCheck(a, f).symplectic; }

size_t symplecticOrder(const MatGroup& g, const Form& f) {
  if (g.dim() != 2 * f.degree()) throw InputError("symplectic counting needs m = 2d");
  unsigned l = std::lcm(g.conductor(), f.conductor());
  Form fl = f.embedded(l);
  size_t count = 0;
  size_t scalars = 0;
  g.forEach([&](const CycMatrix& a0) {
    CycMatrix a = a0.embedded(l);
    auto lambda = semiInvarianceFactor(a, fl);
    if (!lambda) throw InputError("group element does not preserve the form up to a scalar");
    if (a.det() == *lambda * *lambda) ++count;
    if (a.scalarValue()) ++scalars;
  });
  return count / scalars;
}

std::vector<CycMatrix> coveringLift(const std::vector<CycMatrix>& gens, int d) {
  if (gens.empty()) throw InputError("coveringLift needs at least one generator");
  if (d < 1) throw InputError("degree must be positive");
  int m = gens[0].rows();
  unsigned l = std::lcm(commonConductor(gens), static_cast<unsigned>(d));
  auto lift = [&](const CycMatrix& a) {
    CycMatrix b(m + 1, m + 1, l);
    CycMatrix al = a.embedded(l);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) b(i, j) = al(i, j);
    }
    b(m, m) = CycNum::one(l);
    return b;
  };
  std::vector<CycMatrix> out;
  for (const auto& g : gens) {
    if (g.rows() != m || g.cols() != m) throw InputError("generators differ in dimension");
    out.push_back(lift(g));
  }
  out.push_back(lift(CycMatrix::scalar(m, CycNum::zeta(l, l / d))));
  return out;
}

bool fLiftingExists(int m, int d) {
  if (m < 3 || d < 3) throw InputError("F-liftings are considered for m >= 3 and d >= 3");
  if ((m == 3 && d == 3) || (m == 4 && d == 4)) throw InputError("(m, d) = (3, 3) and (4, 4) are excluded");
  return std::gcd(m, d) == 1;
}

}  // namespace cubicsym
