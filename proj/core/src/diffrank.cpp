#include "cubicsym/diffrank.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>

#include "cubicsym/errors.hpp"
#include "cubicsym/groebner.hpp"
#include "cubicsym/modular.hpp"

namespace cubicsym {

Form derivative(const Form& f, const Exps& op) {
  int k = totalDegree(op);
  if (k > f.degree()) return Form(f.nvars(), 0, f.conductor());
  std::vector<Term> out;
  for (const auto& [e, c] : f.terms()) {
    Exps r = e;
    long long factor = 1;
    bool ok = true;
    for (int v = 0; v < kMaxVars && ok; ++v) {
      if (op[v] > e[v]) {
        ok = false;
        break;
      }
      for (int t = 0; t < op[v]; ++t) factor *= e[v] - t;
      r[v] = static_cast<uint8_t>(e[v] - op[v]);
    }
    if (ok) out.emplace_back(r, c.scaled(Int(factor)));
  }
  return Form::fromTerms(f.nvars(), f.degree() - k, f.conductor(), std::move(out));
}

int rankD(const Form& f, int i) {
  if (i < 1 || i > f.degree()) throw InputError("derivative order must be in [1, degree]");
  int m = f.nvars();
  auto ops = monomials(m, i);
  auto cols = monomials(m, f.degree() - i);
  std::unordered_map<Exps, int, ExpsHash> colIndex;
  for (size_t c = 0; c < cols.size(); ++c) colIndex.emplace(cols[c], static_cast<int>(c));
  CycMatrix mat(static_cast<int>(ops.size()), static_cast<int>(cols.size()), f.conductor());
  for (size_t r = 0; r < ops.size(); ++r) {
    Form d = derivative(f, ops[r]);
    for (const auto& [e, c] : d.terms()) mat(static_cast<int>(r), colIndex.at(e)) = c;
  }
  return rank(std::move(mat));
}

Form directionalDerivative(const Form& f, const std::vector<CycNum>& l) {
  if (static_cast<int>(l.size()) != f.nvars()) throw InputError("direction has wrong dimension");
  if (f.degree() < 1) throw InputError("directional derivative of a constant");
  Form acc(f.nvars(), f.degree() - 1, f.conductor());
  for (int i = 0; i < f.nvars(); ++i) {
    if (l[i].isZero()) continue;
    if (l[i].conductor() != f.conductor()) throw DomainError("direction conductor differs from form conductor");
    acc = acc + f.partial(i).scaled(l[i]);
  }
  return acc;
}

bool charSetMember(const Form& f, const std::vector<CycNum>& l, int r) {
  if (f.degree() < 2) throw InputError("characteristic sets need degree >= 2");
  if (std::all_of(l.begin(), l.end(), [](const CycNum& x) { return x.isZero(); })) {
    throw InputError("direction must be nonzero");
  }
  Form g = directionalDerivative(f, l);
  if (g.isZero()) return r == 0;
  return rankD(g, 1) == r;
}

namespace {

// T[i][j][k] = d^3 F / dx_i dx_j dx_k for a cubic.
std::vector<CycNum> thirdDerivatives(const Form& f) {
  int m = f.nvars();
  std::vector<CycNum> t(static_cast<size_t>(m) * m * m, CycNum::zero(f.conductor()));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      for (int k = 0; k < m; ++k) {
        Exps op{};
        op[i]++;
        op[j]++;
        op[k]++;
        Form d = derivative(f, op);
        if (!d.isZero()) t[(static_cast<size_t>(i) * m + j) * m + k] = d.terms().front().second;
      }
    }
  }
  return t;
}

}  // namespace

CycMatrix hessianAt(const Form& f, const std::vector<CycNum>& l) {
  if (f.degree() != 3) throw InputError("hessianAt needs a cubic form");
  int m = f.nvars();
  auto t = thirdDerivatives(f);
  CycMatrix h(m, m, f.conductor());
  for (int i = 0; i < m; ++i) {
    if (l[i].isZero()) continue;
    for (int j = 0; j < m; ++j) {
      for (int k = 0; k < m; ++k) {
        const CycNum& c = t[(static_cast<size_t>(i) * m + j) * m + k];
        if (!c.isZero()) h(j, k) += c * l[i];
      }
    }
  }
  return h;
}

S1Result s1NonEmpty(const Form& f, size_t budget) {
  if (f.degree() != 3) throw InputError("s1NonEmpty needs a cubic form");
  int m = f.nvars();
  S1Result res;

  // Small explicit search: e_i and e_i + c e_j.
  unsigned l = std::lcm(f.conductor(), 3u);
  Form fl = f.embedded(l);
  std::vector<CycNum> coeffs{CycNum::one(l), -CycNum::one(l)};
  for (int k = 1; k <= 2; ++k) {
    CycNum z = CycNum::zeta(l, static_cast<long long>(k) * (l / 3));
    coeffs.push_back(z);
    coeffs.push_back(-z);
  }
  auto tryVec = [&](const std::vector<CycNum>& v) {
    if (rank(hessianAt(fl, v)) == 1) {
      res.status = S1Status::Yes;
      res.witness = v;
      res.method = "search";
      return true;
    }
    return false;
  };
  for (int i = 0; i < m; ++i) {
    std::vector<CycNum> v(m, CycNum::zero(l));
    v[i] = CycNum::one(l);
    if (tryVec(v)) return res;
  }
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      for (const auto& c : coeffs) {
        std::vector<CycNum> v(m, CycNum::zero(l));
        v[i] = CycNum::one(l);
        v[j] = c;
        if (tryVec(v)) return res;
      }
    }
  }

  // Minors of H(l) = sum_i l_i T[i], as quadrics in l.
  auto t = thirdDerivatives(f);
  unsigned n = f.conductor();
  auto entry = [&](int j, int k) {
    std::vector<Term> terms;
    for (int i = 0; i < m; ++i) {
      const CycNum& c = t[(static_cast<size_t>(i) * m + j) * m + k];
      if (c.isZero()) continue;
      Exps e{};
      e[i] = 1;
      terms.emplace_back(e, c);
    }
    return Form::fromTerms(m, 1, n, std::move(terms));
  };
  auto mul = [&](const Form& a, const Form& b) {
    std::vector<Term> terms;
    for (const auto& [ea, ca] : a.terms()) {
      for (const auto& [eb, cb] : b.terms()) {
        Exps e;
        for (int v = 0; v < kMaxVars; ++v) e[v] = static_cast<uint8_t>(ea[v] + eb[v]);
        terms.emplace_back(e, ca * cb);
      }
    }
    return Form::fromTerms(m, 2, n, std::move(terms));
  };
  std::vector<std::vector<Form>> h(m);
  for (int j = 0; j < m; ++j) {
    for (int k = 0; k < m; ++k) h[j].push_back(entry(j, k));
  }
  std::vector<Form> minors;
  std::set<std::string> seen;
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      for (int c = 0; c < m; ++c) {
        for (int d = c + 1; d < m; ++d) {
          Form q = mul(h[a][c], h[b][d]) - mul(h[a][d], h[b][c]);
          if (q.isZero()) continue;
          if (seen.insert(q.pretty()).second) minors.push_back(std::move(q));
        }
      }
    }
  }
  if (minors.empty()) {
    // Every H(l) has rank <= 1; any l with H(l) != 0 is a witness.
    res.status = S1Status::Yes;
    res.method = "minors-vanish";
    return res;
  }

  for (uint64_t p : primesCongruentOne(n, 2)) {
    auto w = rootOfUnityPowers(p, n);
    std::vector<Poly<ModField>> gens;
    try {
      for (const auto& q : minors) gens.push_back(toModPoly(q, p, w));
    } catch (const DomainError&) {
      continue;
    }
    auto gb = groebnerBasis(ModField{p}, gens, budget);
    if (gb.status == GbStatus::Complete && missingPurePowers(gb.basis, m).empty()) {
      res.status = S1Status::No;
      res.method = "modular-groebner p=" + std::to_string(p);
      return res;
    }
  }
  std::vector<Poly<CycField>> gens;
  for (const auto& q : minors) gens.push_back(toPoly(q));
  auto gb = groebnerBasis(CycField{n}, gens, budget);
  res.method = "exact-groebner";
  if (gb.status == GbStatus::Exhausted) {
    res.status = S1Status::Exhausted;
  } else if (missingPurePowers(gb.basis, m).empty()) {
    res.status = S1Status::No;
  } else {
    res.status = S1Status::Yes;
  }
  return res;
}

std::optional<std::pair<int, int>> eigenPartitionWitness(const CycMatrix& a) { return cubeRootEigenShape(a, 10000); }

std::string certificateName(PartitionCertificate c) {
  switch (c) {
    case PartitionCertificate::MonomialSupport:
      return "MonomialSupport";
    case PartitionCertificate::EigenvalueWitness:
      return "EigenvalueWitness";
    case PartitionCertificate::ExplicitMatrix:
      return "ExplicitMatrix";
  }
  return "?";
}

std::string PartitionReport::str() const {
  std::string s;
  for (const auto& b : blocks) {
    s += "{";
    for (size_t i = 0; i < b.size(); ++i) {
      if (i) s += ",";
      s += "x" + std::to_string(b[i] + 1);
    }
    s += "}";
  }
  s += " residual={";
  for (size_t i = 0; i < residual.size(); ++i) {
    if (i) s += ",";
    s += "x" + std::to_string(residual[i] + 1);
  }
  s += "} certifiedBy=" + certificateName(certifiedBy);
  if (!note.empty()) s += " (" + note + ")";
  return s;
}

PartitionReport supportPartition(const std::vector<Exps>& monos, int m) {
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<bool> used(m, false);
  for (const auto& e : monos) {
    int first = -1;
    for (int v = 0; v < m; ++v) {
      if (!e[v]) continue;
      used[v] = true;
      if (first < 0) {
        first = v;
      } else {
        parent[find(v)] = find(first);
      }
    }
  }
  PartitionReport r;
  std::vector<int> blockOf(m, -1);
  for (int v = 0; v < m; ++v) {
    if (!used[v]) {
      r.residual.push_back(v);
      continue;
    }
    int root = find(v);
    if (blockOf[root] < 0) {
      blockOf[root] = static_cast<int>(r.blocks.size());
      r.blocks.emplace_back();
    }
    r.blocks[blockOf[root]].push_back(v);
  }
  r.certifiedBy = PartitionCertificate::MonomialSupport;
  return r;
}

PartitionReport partitionReport(const Form& f, const MatGroup* g) {
  std::vector<Exps> monos;
  for (const auto& t : f.terms()) monos.push_back(t.first);
  PartitionReport r = supportPartition(monos, f.nvars());
  if (r.blocks.size() > 1 || !g) return r;
  std::optional<PartitionReport> found;
  auto check = [&](const CycMatrix& a) {
    if (found) return;
    auto tag = eigenPartitionWitness(a);
    if (!tag) return;
    PartitionReport e;
    e.certifiedBy = PartitionCertificate::EigenvalueWitness;
    int m = a.rows();
    if (a.isDiagonal()) {
      // Coordinates grouped by the eigenvalue of the diagonal entry.
      const CycNum& first = a(0, 0);
      std::vector<int> same, other;
      for (int v = 0; v < m; ++v) (a(v, v) == first ? same : other).push_back(v);
      e.blocks = {same, other};
      std::sort(e.blocks.begin(), e.blocks.end(), [](const auto& x, const auto& y) { return x.front() < y.front(); });
      e.note = "eigenspaces of a diagonal element";
    } else {
      std::vector<int> b1, b2;
      for (int v = 0; v < m; ++v) (v < tag->first ? b1 : b2).push_back(v);
      e.blocks = {b1, b2};
      e.note = "coordinates of an eigenbasis of an element";
    }
    found = std::move(e);
  };
  for (const auto& gen : g->generators()) check(gen);
  if (!found && g->materialized()) g->forEach(check);
  return found ? *found : r;
}

bool verifyExplicitPartition(const Form& f, const CycMatrix& a, const std::vector<std::vector<int>>& blocks) {
  Form g = apply(a, f);
  std::vector<int> blockOf(f.nvars(), -1);
  for (size_t b = 0; b < blocks.size(); ++b) {
    for (int v : blocks[b]) {
      if (v < 0 || v >= f.nvars() || blockOf[v] != -1) throw InputError("blocks must be disjoint variable sets");
      blockOf[v] = static_cast<int>(b);
    }
  }
  for (const auto& [e, c] : g.terms()) {
    int b = -2;
    for (int v = 0; v < f.nvars(); ++v) {
      if (!e[v]) continue;
      if (blockOf[v] < 0) return false;
      if (b == -2) {
        b = blockOf[v];
      } else if (b != blockOf[v]) {
        return false;
      }
    }
  }
  return true;
}

bool verifyBlockShape(const MatGroup& g, const std::vector<int>& sizes, bool allowSwap) {
  int m = g.dim();
  int sum = std::accumulate(sizes.begin(), sizes.end(), 0);
  if (sum > m) throw InputError("block sizes exceed the dimension");
  std::vector<int> blockOf(m);
  int v = 0;
  for (size_t b = 0; b < sizes.size(); ++b) {
    for (int k = 0; k < sizes[b]; ++k) blockOf[v++] = static_cast<int>(b);
  }
  for (; v < m; ++v) blockOf[v] = static_cast<int>(sizes.size());
  bool swapMode = allowSwap && sizes.size() == 3 && sizes[0] == 1 && sizes[1] == 3 && sizes[2] == 3;
  auto fits = [&](const CycMatrix& a) {
    bool diag = true, swapped = swapMode;
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        if (a(i, j).isZero()) continue;
        int bi = blockOf[i], bj = blockOf[j];
        if (bi != bj) diag = false;
        if (swapped) {
          bool ok = (bi == 0 && bj == 0) || (bi == 1 && bj == 2) || (bi == 2 && bj == 1) || (bi >= 3 && bi == bj);
          if (!ok) swapped = false;
        }
      }
    }
    return diag || swapped;
  };
  bool all = true;
  if (g.materialized()) {
    g.forEach([&](const CycMatrix& a) { all = all && fits(a); });
  } else {
    // Block-diagonal-or-swapped matrices form a group, so generators suffice.
    for (const auto& a : g.generators()) all = all && fits(a);
  }
  return all;
}

}  // namespace cubicsym
