#include "cubicsym/groebner.hpp"

#include <algorithm>

#include "cubicsym/errors.hpp"

namespace cubicsym {

namespace {

bool divides(const Exps& a, const Exps& b) noexcept {
  for (int i = 0; i < kMaxVars; ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Exps lcmExps(const Exps& a, const Exps& b) noexcept {
  Exps r;
  for (int i = 0; i < kMaxVars; ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Exps quotient(const Exps& b, const Exps& a) noexcept {
  Exps r;
  for (int i = 0; i < kMaxVars; ++i) r[i] = static_cast<uint8_t>(b[i] - a[i]);
  return r;
}

bool coprime(const Exps& a, const Exps& b) noexcept {
  for (int i = 0; i < kMaxVars; ++i) {
    if (a[i] && b[i]) return false;
  }
  return true;
}

template <class K>
using Terms = std::vector<std::pair<Exps, typename K::Elem>>;

// a[ia..] + c * x^s * b[ib..], merged in grevlex-descending order.
template <class K>
Terms<K> addScaledShifted(const K& k, const Terms<K>& a, size_t ia, const typename K::Elem& c, const Exps& s,
                          const Terms<K>& b, size_t ib) {
  Terms<K> out;
  out.reserve(a.size() - ia + b.size() - ib);
  size_t i = ia, j = ib;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    Exps eb;
    for (int v = 0; v < kMaxVars; ++v) eb[v] = static_cast<uint8_t>(b[j].first[v] + s[v]);
    int cmp = i == a.size() ? -1 : grevlexCmp(a[i].first, eb);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.emplace_back(eb, k.mul(c, b[j].second));
      ++j;
    } else {
      auto v = k.add(a[i].second, k.mul(c, b[j].second));
      if (!k.isZero(v)) out.emplace_back(eb, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

template <class K>
void makeMonic(const K& k, Poly<K>& f) {
  if (f.terms.empty()) return;
  auto lc = f.terms.front().second;
  if (lc == k.one()) return;
  auto inv = k.inv(lc);
  for (auto& t : f.terms) t.second = k.mul(t.second, inv);
}

template <class K>
const Poly<K>* findReducer(const std::vector<const Poly<K>*>& basis, const Exps& e) {
  for (const auto* g : basis) {
    if (divides(g->lead(), e)) return g;
  }
  return nullptr;
}

template <class K>
Poly<K> reduceWith(const K& k, Poly<K> f, const std::vector<const Poly<K>*>& basis) {
  Terms<K> result;
  Terms<K> work = std::move(f.terms);
  size_t i = 0;
  while (i < work.size()) {
    const Exps& e = work[i].first;
    const Poly<K>* g = findReducer<K>(basis, e);
    if (!g) {
      result.push_back(std::move(work[i]));
      ++i;
      continue;
    }
    // work -= c x^s g with c = leading coefficient (g is monic).
    auto c = k.neg(work[i].second);
    Exps s = quotient(e, g->lead());
    work = addScaledShifted(k, work, i + 1, c, s, g->terms, 1);
    i = 0;
  }
  Poly<K> r;
  r.terms = std::move(result);
  r.sugar = f.sugar;
  return r;
}

struct Pair {
  size_t i;
  size_t j;
  Exps lcm;
  int sugar;
  int degree;
};

}  // namespace

template <class K>
Poly<K> reduceBy(const K& field, Poly<K> f, const std::vector<Poly<K>>& basis) {
  std::vector<const Poly<K>*> ptrs;
  for (const auto& g : basis) {
    if (g.isZero()) continue;
    if (!(g.terms.front().second == field.one())) throw InputError("reduceBy needs monic polynomials");
    ptrs.push_back(&g);
  }
  return reduceWith(field, std::move(f), ptrs);
}

template <class K>
GbResult<K> groebnerBasis(const K& field, const std::vector<Poly<K>>& gens, size_t budget) {
  GbResult<K> res;
  std::vector<Poly<K>> polys;
  std::vector<bool> active;
  std::vector<Pair> pairs;

  auto activeList = [&]() {
    std::vector<const Poly<K>*> out;
    for (size_t i = 0; i < polys.size(); ++i) {
      if (active[i]) out.push_back(&polys[i]);
    }
    return out;
  };

  auto pairSugar = [&](size_t a, size_t b, const Exps& l) {
    int dl = totalDegree(l);
    int sa = polys[a].sugar + dl - totalDegree(polys[a].lead());
    int sb = polys[b].sugar + dl - totalDegree(polys[b].lead());
    return std::max(sa, sb);
  };

  // Gebauer-Moeller update for the new polynomial at index h.
  auto update = [&](size_t h) {
    const Exps& lh = polys[h].lead();
    std::vector<Pair> c;
    for (size_t g = 0; g < h; ++g) {
      if (!active[g]) continue;
      Exps l = lcmExps(polys[g].lead(), lh);
      c.push_back({g, h, l, pairSugar(g, h, l), totalDegree(l)});
    }
    std::vector<Pair> d;
    for (size_t a = 0; a < c.size(); ++a) {
      const Pair& p = c[a];
      bool keep = coprime(polys[p.i].lead(), lh);
      if (!keep) {
        keep = true;
        for (size_t b = a + 1; b < c.size() && keep; ++b) {
          if (divides(c[b].lcm, p.lcm)) keep = false;
        }
        for (size_t b = 0; b < d.size() && keep; ++b) {
          if (divides(d[b].lcm, p.lcm)) keep = false;
        }
      }
      if (keep) d.push_back(p);
    }
    std::vector<Pair> kept;
    for (const auto& p : pairs) {
      bool drop = divides(lh, p.lcm) && lcmExps(polys[p.i].lead(), lh) != p.lcm &&
                  lcmExps(lh, polys[p.j].lead()) != p.lcm;
      if (!drop) kept.push_back(p);
    }
    for (const auto& p : d) {
      if (!coprime(polys[p.i].lead(), lh)) kept.push_back(p);
    }
    pairs = std::move(kept);
    for (size_t g = 0; g < h; ++g) {
      if (active[g] && divides(lh, polys[g].lead())) active[g] = false;
    }
  };

  auto insert = [&](Poly<K> f) {
    makeMonic(field, f);
    polys.push_back(std::move(f));
    active.push_back(true);
    update(polys.size() - 1);
  };

  for (const auto& g : gens) {
    if (g.isZero()) continue;
    Poly<K> r = reduceWith(field, g, activeList());
    if (r.isZero()) continue;
    r.sugar = std::max(g.sugar, totalDegree(r.lead()));
    insert(std::move(r));
  }

  while (!pairs.empty()) {
    if (res.reductions >= budget) {
      res.status = GbStatus::Exhausted;
      break;
    }
    size_t best = 0;
    for (size_t a = 1; a < pairs.size(); ++a) {
      const Pair& p = pairs[a];
      const Pair& q = pairs[best];
      if (p.sugar < q.sugar || (p.sugar == q.sugar && grevlexCmp(p.lcm, q.lcm) < 0)) best = a;
    }
    Pair p = pairs[best];
    pairs.erase(pairs.begin() + static_cast<long>(best));
    const Poly<K>& f = polys[p.i];
    const Poly<K>& g = polys[p.j];
    Exps sf = quotient(p.lcm, f.lead());
    Exps sg = quotient(p.lcm, g.lead());
    Terms<K> shifted;
    shifted.reserve(f.terms.size());
    for (size_t t = 1; t < f.terms.size(); ++t) {
      Exps e;
      for (int v = 0; v < kMaxVars; ++v) e[v] = static_cast<uint8_t>(f.terms[t].first[v] + sf[v]);
      shifted.emplace_back(e, f.terms[t].second);
    }
    Poly<K> s;
    s.terms = addScaledShifted(field, shifted, 0, field.neg(field.one()), sg, g.terms, 1);
    s.sugar = p.sugar;
    ++res.reductions;
    Poly<K> r = reduceWith(field, std::move(s), activeList());
    if (!r.isZero()) insert(std::move(r));
  }

  for (size_t i = 0; i < polys.size(); ++i) {
    if (active[i]) res.basis.push_back(polys[i]);
  }
  return res;
}

template <class K>
std::vector<int> missingPurePowers(const std::vector<Poly<K>>& basis, int m) {
  std::vector<bool> has(m, false);
  for (const auto& g : basis) {
    if (g.isZero()) continue;
    const Exps& e = g.lead();
    int var = -1, count = 0;
    for (int v = 0; v < kMaxVars; ++v) {
      if (e[v]) {
        var = v;
        ++count;
      }
    }
    if (count == 1 && var < m) has[var] = true;
  }
  std::vector<int> out;
  for (int v = 0; v < m; ++v) {
    if (!has[v]) out.push_back(v);
  }
  return out;
}

Poly<CycField> toPoly(const Form& f) {
  Poly<CycField> p;
  p.terms = f.terms();
  p.sugar = f.degree();
  return p;
}

Poly<ModField> toModPoly(const Form& f, uint64_t prime, const std::vector<uint64_t>& wPowers) {
  Poly<ModField> p;
  for (const auto& [e, c] : f.terms()) {
    uint64_t v = c.modp(prime, wPowers);
    if (v != 0) p.terms.emplace_back(e, v);
  }
  p.sugar = f.degree();
  return p;
}

template GbResult<CycField> groebnerBasis(const CycField&, const std::vector<Poly<CycField>>&, size_t);
template GbResult<ModField> groebnerBasis(const ModField&, const std::vector<Poly<ModField>>&, size_t);
template Poly<CycField> reduceBy(const CycField&, Poly<CycField>, const std::vector<Poly<CycField>>&);
template Poly<ModField> reduceBy(const ModField&, Poly<ModField>, const std::vector<Poly<ModField>>&);
template std::vector<int> missingPurePowers(const std::vector<Poly<CycField>>&, int);
template std::vector<int> missingPurePowers(const std::vector<Poly<ModField>>&, int);

}  // namespace cubicsym
