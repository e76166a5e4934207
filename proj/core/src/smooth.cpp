#include "cubicsym/smooth.hpp"

#include <algorithm>
#include <numeric>

#include "cubicsym/errors.hpp"
#include "cubicsym/groebner.hpp"
#include "cubicsym/modular.hpp"

namespace cubicsym {

std::string kindName(WitnessKind k) {
  switch (k) {
    case WitnessKind::MissingSquareTerm:
      return "L38-i";
    case WitnessKind::ThreeVariableIdeal:
      return "L38-ii";
    case WitnessKind::TwoPlusSquareIdeal:
      return "L38-iii";
    case WitnessKind::OnePlusSquareIdeal:
      return "L38-iv";
    case WitnessKind::PartitionCover:
      return "L310";
    case WitnessKind::JacobianZero:
      return "JacobianZero";
  }
  return "?";
}

std::string statusName(SmoothStatus s) {
  switch (s) {
    case SmoothStatus::Smooth:
      return "SMOOTH";
    case SmoothStatus::Singular:
      return "SINGULAR";
    case SmoothStatus::Exhausted:
      return "EXHAUSTED";
  }
  return "?";
}

namespace {

std::string varList(const std::vector<int>& v) {
  std::string s = "{";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += "x" + std::to_string(v[i] + 1);
  }
  return s + "}";
}

int degreeIn(const Exps& e, std::initializer_list<int> vars) {
  int s = 0;
  for (int v : vars) s += e[v];
  return s;
}

void requireCubicSupport(const std::vector<Exps>& supp) {
  for (const auto& e : supp) {
    if (totalDegree(e) != 3) throw InputError("combinatorial tests need a cubic form");
  }
}

bool condI(const std::vector<Exps>& supp, int i) {
  for (const auto& e : supp) {
    if (e[i] >= 2) return false;
  }
  return true;
}

bool condII(const std::vector<Exps>& supp, int p, int q, int r) {
  for (const auto& e : supp) {
    if (degreeIn(e, {p, q, r}) == 0) return false;
  }
  return true;
}

bool condIII(const std::vector<Exps>& supp, int p, int q, int r, int s) {
  for (const auto& e : supp) {
    if (degreeIn(e, {p, q}) == 0 && degreeIn(e, {r, s}) < 2) return false;
  }
  return true;
}

bool condIV(const std::vector<Exps>& supp, int p, int q, int r, int s, int t) {
  for (const auto& e : supp) {
    if (e[p] == 0 && degreeIn(e, {q, r, s, t}) < 2) return false;
  }
  return true;
}

// 0 = V1, 1 = V2, 2 = V3
bool coverMatches(const std::vector<Exps>& supp, int m, const std::vector<int>& label) {
  for (const auto& e : supp) {
    int inV1 = 0, inV2 = 0;
    for (int v = 0; v < m; ++v) {
      if (label[v] == 0) inV1 += e[v];
      if (label[v] == 1) inV2 += e[v];
    }
    if (inV1 <= 1) continue;
    if (inV1 == 2 && inV2 == 1) continue;
    return false;
  }
  return true;
}

std::vector<Form> partials(const Form& f) {
  std::vector<Form> out;
  for (int i = 0; i < f.nvars(); ++i) out.push_back(f.partial(i));
  return out;
}

NonSmoothWitness pointWitness(std::vector<CycNum> pt) {
  NonSmoothWitness w;
  w.kind = WitnessKind::JacobianZero;
  std::string s = "(";
  for (size_t i = 0; i < pt.size(); ++i) {
    if (i) s += ":";
    s += pt[i].pretty();
  }
  w.detail = "common zero of the partials at " + s + ")";
  w.point = std::move(pt);
  return w;
}

}  // namespace

std::string NonSmoothWitness::describe() const {
  std::string s = kindName(kind);
  switch (kind) {
    case WitnessKind::MissingSquareTerm:
      s += " " + varList(vars) + " has no x_i^2*x_j term";
      break;
    case WitnessKind::ThreeVariableIdeal:
      s += " F in (" + varList(vars) + ")";
      break;
    case WitnessKind::TwoPlusSquareIdeal:
      s += " F in " + varList({vars[0], vars[1]}) + " + " + varList({vars[2], vars[3]}) + "^2";
      break;
    case WitnessKind::OnePlusSquareIdeal:
      s += " F in " + varList({vars[0]}) + " + " + varList({vars[1], vars[2], vars[3], vars[4]}) + "^2";
      break;
    case WitnessKind::PartitionCover:
      s += " V1=" + varList(v1) + " V2=" + varList(v2) + " V3=" + varList(v3);
      break;
    case WitnessKind::JacobianZero:
      s += " " + detail;
      break;
  }
  return s;
}

std::vector<Exps> support(const Form& f) {
  std::vector<Exps> s;
  s.reserve(f.size());
  for (const auto& t : f.terms()) s.push_back(t.first);
  return s;
}

std::optional<NonSmoothWitness> combinatorialNonSmooth(const std::vector<Exps>& supp, int m) {
  requireCubicSupport(supp);
  NonSmoothWitness w;
  for (int i = 0; i < m; ++i) {
    if (condI(supp, i)) {
      w.kind = WitnessKind::MissingSquareTerm;
      w.vars = {i};
      return w;
    }
  }
  if (m < 7) return std::nullopt;
  for (int p = 0; p < m; ++p) {
    for (int q = p + 1; q < m; ++q) {
      for (int r = q + 1; r < m; ++r) {
        if (condII(supp, p, q, r)) {
          w.kind = WitnessKind::ThreeVariableIdeal;
          w.vars = {p, q, r};
          return w;
        }
      }
    }
  }
  for (int p = 0; p < m; ++p) {
    for (int q = p + 1; q < m; ++q) {
      for (int r = 0; r < m; ++r) {
        if (r == p || r == q) continue;
        for (int s = r + 1; s < m; ++s) {
          if (s == p || s == q) continue;
          if (condIII(supp, p, q, r, s)) {
            w.kind = WitnessKind::TwoPlusSquareIdeal;
            w.vars = {p, q, r, s};
            return w;
          }
        }
      }
    }
  }
  for (int p = 0; p < m; ++p) {
    std::vector<int> rest;
    for (int v = 0; v < m; ++v) {
      if (v != p) rest.push_back(v);
    }
    int k = static_cast<int>(rest.size());
    for (int a = 0; a < k; ++a) {
      for (int b = a + 1; b < k; ++b) {
        for (int c = b + 1; c < k; ++c) {
          for (int d = c + 1; d < k; ++d) {
            if (condIV(supp, p, rest[a], rest[b], rest[c], rest[d])) {
              w.kind = WitnessKind::OnePlusSquareIdeal;
              w.vars = {p, rest[a], rest[b], rest[c], rest[d]};
              return w;
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<NonSmoothWitness> combinatorialNonSmooth(const Form& f) {
  if (f.degree() != 3) throw InputError("combinatorial tests need a cubic form");
  return combinatorialNonSmooth(support(f), f.nvars());
}

bool partitionNonSmooth(const std::vector<Exps>& supp, int m, const std::vector<int>& v1, const std::vector<int>& v2,
                        const std::vector<int>& v3) {
  std::vector<int> label(m, -1);
  auto assign = [&](const std::vector<int>& vs, int tag) {
    for (int v : vs) {
      if (v < 0 || v >= m) throw InputError("variable index out of range in cover");
      if (label[v] != -1) throw InputError("variable sets overlap");
      label[v] = tag;
    }
  };
  assign(v1, 0);
  assign(v2, 1);
  assign(v3, 2);
  for (int v = 0; v < m; ++v) {
    if (label[v] == -1) throw InputError("variable sets do not cover all variables");
  }
  if (v1.size() <= v2.size()) throw InputError("cover needs |V1| > |V2|");
  requireCubicSupport(supp);
  return coverMatches(supp, m, label);
}

bool partitionNonSmooth(const Form& f, const std::vector<int>& v1, const std::vector<int>& v2,
                        const std::vector<int>& v3) {
  if (f.degree() != 3) throw InputError("partition test needs a cubic form");
  return partitionNonSmooth(support(f), f.nvars(), v1, v2, v3);
}

std::optional<NonSmoothWitness> findPartitionCover(const std::vector<Exps>& supp, int m) {
  requireCubicSupport(supp);
  std::vector<int> label(m, 0);
  long long total = 1;
  for (int i = 0; i < m; ++i) total *= 3;
  for (long long code = 0; code < total; ++code) {
    long long c = code;
    int n1 = 0, n2 = 0;
    for (int v = 0; v < m; ++v) {
      label[v] = static_cast<int>(c % 3);
      c /= 3;
      n1 += label[v] == 0;
      n2 += label[v] == 1;
    }
    if (n1 <= n2) continue;
    if (!coverMatches(supp, m, label)) continue;
    NonSmoothWitness w;
    w.kind = WitnessKind::PartitionCover;
    for (int v = 0; v < m; ++v) {
      (label[v] == 0 ? w.v1 : label[v] == 1 ? w.v2 : w.v3).push_back(v);
    }
    return w;
  }
  return std::nullopt;
}

bool replayWitness(const Form& f, const NonSmoothWitness& w) {
  auto supp = support(f);
  const auto& v = w.vars;
  switch (w.kind) {
    case WitnessKind::MissingSquareTerm:
      return condI(supp, v.at(0));
    case WitnessKind::ThreeVariableIdeal:
      return condII(supp, v.at(0), v.at(1), v.at(2));
    case WitnessKind::TwoPlusSquareIdeal:
      return condIII(supp, v.at(0), v.at(1), v.at(2), v.at(3));
    case WitnessKind::OnePlusSquareIdeal:
      return condIV(supp, v.at(0), v.at(1), v.at(2), v.at(3), v.at(4));
    case WitnessKind::PartitionCover:
      return partitionNonSmooth(supp, f.nvars(), w.v1, w.v2, w.v3);
    case WitnessKind::JacobianZero:
      if (!w.point) {
        SmoothOptions opt;
        opt.exactOnly = true;
        auto r = isSmooth(f, opt);
        return r.status == SmoothStatus::Singular;
      }
      for (const auto& p : partials(f)) {
        if (!p.evaluate(*w.point).isZero()) return false;
      }
      return true;
  }
  return false;
}

std::optional<std::vector<CycNum>> findSmallCommonZero(const Form& f, bool withCubeRoots) {
  int m = f.nvars();
  unsigned n = withCubeRoots ? std::lcm(f.conductor(), 3u) : f.conductor();
  Form g = f.embedded(n);
  auto ps = partials(g);
  std::vector<CycNum> values{CycNum::zero(n), CycNum::one(n)};
  if (withCubeRoots) {
    values.push_back(CycNum::zeta(n, n / 3));
    values.push_back(CycNum::zeta(n, 2 * (n / 3)));
  }
  size_t base = values.size();
  size_t total = 1;
  for (int i = 0; i < m; ++i) total *= base;
  std::vector<CycNum> pt(m);
  for (size_t code = 1; code < total; ++code) {
    size_t c = code;
    bool leadingOne = false;
    for (int i = 0; i < m; ++i) {
      size_t k = c % base;
      c /= base;
      pt[i] = values[k];
      // Projective points: the first nonzero coordinate is 1.
      if (!leadingOne && k != 0) {
        if (k != 1) goto next;
        leadingOne = true;
      }
    }
    {
      bool zero = true;
      for (const auto& p : ps) {
        if (!p.evaluate(pt).isZero()) {
          zero = false;
          break;
        }
      }
      if (zero) {
        std::vector<CycNum> out;
        for (const auto& x : pt) out.push_back(x);
        return out;
      }
    }
  next:;
  }
  return std::nullopt;
}

SmoothResult isSmooth(const Form& f, const SmoothOptions& opt) {
  if (f.isZero()) throw InputError("zero form");
  if (f.degree() < 2) throw InputError("smoothness needs degree >= 2");
  SmoothResult res;
  int m = f.nvars();
  if (f.degree() == 3) {
    auto supp = support(f);
    if (auto w = combinatorialNonSmooth(supp, m)) {
      res.status = SmoothStatus::Singular;
      res.witness = std::move(w);
      res.method = "support-witness";
      return res;
    }
    if (auto w = findPartitionCover(supp, m)) {
      res.status = SmoothStatus::Singular;
      res.witness = std::move(w);
      res.method = "support-witness";
      return res;
    }
  }
  if (auto pt = findSmallCommonZero(f, false)) {
    res.status = SmoothStatus::Singular;
    res.witness = pointWitness(std::move(*pt));
    res.method = "point-search";
    return res;
  }
  auto ps = partials(f);
  if (!opt.exactOnly && opt.modularPrimes > 0) {
    for (uint64_t p : primesCongruentOne(f.conductor(), static_cast<size_t>(opt.modularPrimes))) {
      auto w = rootOfUnityPowers(p, f.conductor());
      std::vector<Poly<ModField>> gens;
      try {
        for (const auto& q : ps) gens.push_back(toModPoly(q, p, w));
      } catch (const DomainError&) {
        continue;
      }
      auto gb = groebnerBasis(ModField{p}, gens, opt.budget);
      res.reductions += gb.reductions;
      if (gb.status == GbStatus::Exhausted) {
        res.status = SmoothStatus::Exhausted;
        res.method = "modular-groebner";
        return res;
      }
      if (missingPurePowers(gb.basis, m).empty()) {
        res.status = SmoothStatus::Smooth;
        res.method = "modular-groebner p=" + std::to_string(p);
        return res;
      }
    }
  }
  if (!opt.exactFallback) {
    res.status = SmoothStatus::Exhausted;
    res.method = "modular-groebner";
    return res;
  }
  std::vector<Poly<CycField>> gens;
  for (const auto& q : ps) gens.push_back(toPoly(q));
  auto gb = groebnerBasis(CycField{f.conductor()}, gens, opt.budget);
  res.reductions += gb.reductions;
  res.method = "exact-groebner";
  if (gb.status == GbStatus::Exhausted) {
    res.status = SmoothStatus::Exhausted;
    return res;
  }
  auto missing = missingPurePowers(gb.basis, m);
  if (missing.empty()) {
    res.status = SmoothStatus::Smooth;
    return res;
  }
  NonSmoothWitness w;
  w.kind = WitnessKind::JacobianZero;
  w.vars = missing;
  w.detail = "Groebner basis of the partials has no pure power of " + varList(missing);
  res.status = SmoothStatus::Singular;
  res.witness = std::move(w);
  return res;
}

}  // namespace cubicsym
