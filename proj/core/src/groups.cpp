#include "cubicsym/groups.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "cubicsym/errors.hpp"

namespace cubicsym {

namespace {

void putVarint(std::string& s, uint64_t v) {
  while (v >= 0x80) {
    s.push_back(static_cast<char>((v & 0x7f) | 0x80));
    v >>= 7;
  }
  s.push_back(static_cast<char>(v));
}

uint64_t getVarint(std::string_view s, size_t& pos) {
  uint64_t v = 0;
  int shift = 0;
  while (true) {
    auto b = static_cast<uint8_t>(s.at(pos++));
    v |= static_cast<uint64_t>(b & 0x7f) << shift;
    if (!(b & 0x80)) return v;
    shift += 7;
  }
}

// Small values: zigzag(v) << 1. Big values: (length << 1) | 1, then decimal digits.
void putInt(std::string& s, const Int& v) {
  if (v.isSmall() && v.small() > INT64_MIN / 4 && v.small() < INT64_MAX / 4) {
    int64_t x = v.small();
    uint64_t z = (static_cast<uint64_t>(x) << 1) ^ static_cast<uint64_t>(x >> 63);
    putVarint(s, z << 1);
    return;
  }
  std::string d = v.str();
  putVarint(s, (static_cast<uint64_t>(d.size()) << 1) | 1);
  s += d;
}

Int getInt(std::string_view s, size_t& pos) {
  uint64_t h = getVarint(s, pos);
  if (h & 1) {
    size_t len = h >> 1;
    Int v = Int::parse(s.substr(pos, len));
    pos += len;
    return v;
  }
  uint64_t z = h >> 1;
  auto x = static_cast<int64_t>((z >> 1) ^ (~(z & 1) + 1));
  return Int(static_cast<long long>(x));
}

}  // namespace

std::string packMatrix(const CycMatrix& a) {
  std::string s;
  s.reserve(static_cast<size_t>(a.rows()) * a.cols() * 3);
  for (const auto& x : a.data()) {
    putVarint(s, x.terms().size());
    if (x.isZero()) continue;
    putInt(s, x.den());
    for (const auto& t : x.terms()) {
      putVarint(s, t.e);
      putInt(s, t.c);
    }
  }
  return s;
}

CycMatrix unpackMatrix(std::string_view s, int m, unsigned n) {
  const CycContext& ctx = CycContext::get(n);
  CycMatrix a(m, m, n);
  size_t pos = 0;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      uint64_t k = getVarint(s, pos);
      if (k == 0) continue;
      Int den = getInt(s, pos);
      std::vector<Int> dense(ctx.phi());
      for (uint64_t t = 0; t < k; ++t) {
        auto e = getVarint(s, pos);
        dense.at(e) = getInt(s, pos);
      }
      a(i, j) = CycNum::fromDense(ctx, std::move(dense), std::move(den));
    }
  }
  return a;
}

MatGroup::MatGroup(std::vector<CycMatrix> gens) {
  if (gens.empty()) throw InputError("a group needs at least one generator");
  m_ = gens[0].rows();
  n_ = commonConductor(gens);
  for (auto& g : gens) {
    if (g.rows() != m_ || g.cols() != m_) throw InputError("generators differ in dimension");
    g = g.embedded(n_);
    if (g.det().isZero()) throw InputError("generator is singular");
  }
  gens_ = std::move(gens);
}

MatGroup::MatGroup(const MatGroup& o)
    : m_(o.m_), n_(o.n_), gens_(o.gens_), materialized_(o.materialized_), packed_(o.packed_) {
  for (const auto& p : packed_) index_.insert(p);
}

MatGroup& MatGroup::operator=(const MatGroup& o) {
  if (this != &o) {
    MatGroup tmp(o);
    *this = std::move(tmp);
  }
  return *this;
}

MatGroup MatGroup::closure(std::vector<CycMatrix> gens, size_t cap) {
  MatGroup g(std::move(gens));
  g.materialize(cap);
  return g;
}

void MatGroup::materialize(size_t cap) {
  if (materialized_) return;
  packed_.clear();
  index_.clear();
  auto insert = [&](std::string key) -> bool {
    if (index_.count(key)) return false;
    if (packed_.size() >= cap) throw CapExceeded(packed_.size(), cap);
    packed_.push_back(std::move(key));
    index_.insert(packed_.back());
    return true;
  };
  insert(packMatrix(CycMatrix::identity(m_, n_)));
  for (size_t head = 0; head < packed_.size(); ++head) {
    CycMatrix e = unpackMatrix(packed_[head], m_, n_);
    for (const auto& g : gens_) insert(packMatrix(e * g));
  }
  materialized_ = true;
}

size_t MatGroup::order() const {
  if (!materialized_) throw InputError("group is not materialized");
  return packed_.size();
}

CycMatrix MatGroup::element(size_t i) const {
  if (!materialized_) throw InputError("group is not materialized");
  return unpackMatrix(packed_.at(i), m_, n_);
}

bool MatGroup::contains(const CycMatrix& a) const {
  if (!materialized_) throw InputError("group is not materialized");
  if (a.rows() != m_ || a.cols() != m_) return false;
  if (n_ % a.conductor() != 0) return false;
  return index_.count(packMatrix(a.embedded(n_))) > 0;
}

void MatGroup::forEach(const std::function<void(const CycMatrix&)>& fn) const {
  if (!materialized_) throw InputError("group is not materialized");
  for (const auto& p : packed_) fn(unpackMatrix(p, m_, n_));
}

size_t scalarSubgroupOrder(const MatGroup& g) {
  size_t c = 0;
  g.forEach([&](const CycMatrix& a) { c += a.scalarValue().has_value(); });
  return c;
}

size_t projectiveOrder(const MatGroup& g) { return g.order() / scalarSubgroupOrder(g); }

bool isSemiPermutation(const CycMatrix& a) { return a.isSquare() && a.nonzeroCount() == a.rows() && !a.det().isZero(); }

bool isSemiPermutation(const MatGroup& g) {
  bool all = true;
  g.forEach([&](const CycMatrix& a) { all = all && a.nonzeroCount() == a.rows(); });
  return all;
}

bool isAbelian(const MatGroup& g) {
  const auto& gs = g.generators();
  for (size_t i = 0; i < gs.size(); ++i) {
    for (size_t j = i + 1; j < gs.size(); ++j) {
      if (gs[i] * gs[j] != gs[j] * gs[i]) return false;
    }
  }
  return true;
}

std::string EigenMultiset::str() const {
  std::string s = "{";
  for (size_t i = 0; i < mult.size(); ++i) {
    if (i) s += ", ";
    const auto& [r, k] = mult[i];
    if (r.num == 0) {
      s += "1";
    } else {
      s += "e(" + std::to_string(r.num) + "/" + std::to_string(r.den) + ")";
    }
    s += " x" + std::to_string(k);
  }
  return s + "}";
}

EigenMultiset eigenMultiset(const CycMatrix& a, long long orderCap) {
  auto ord = a.order(orderCap);
  if (!ord) throw DomainError("matrix has no finite order up to " + std::to_string(orderCap));
  unsigned k = static_cast<unsigned>(*ord);
  unsigned l = std::lcm(a.conductor(), k);
  CycMatrix al = a.embedded(l);
  int m = a.rows();
  EigenMultiset out;
  int total = 0;
  for (unsigned j = 0; j < k && total < m; ++j) {
    CycNum lambda = CycNum::zeta(l, static_cast<long long>(j) * (l / k));
    CycMatrix b = al;
    for (int i = 0; i < m; ++i) b(i, i) -= lambda;
    int mult = m - rank(b);
    if (mult == 0) continue;
    unsigned g = std::gcd(j, k);
    out.mult.push_back({RootOfUnity{j / g, k / g}, mult});
    total += mult;
  }
  std::sort(out.mult.begin(), out.mult.end());
  return out;
}

std::vector<EigenMultiset> eigenMultisets(const MatGroup& g) {
  std::vector<EigenMultiset> out;
  g.forEach([&](const CycMatrix& a) { out.push_back(eigenMultiset(a)); });
  return out;
}

std::optional<std::pair<int, int>> cubeRootEigenShape(const CycMatrix& a, long long orderCap) {
  auto ord = a.order(orderCap);
  if (!ord) throw DomainError("matrix has no finite order up to " + std::to_string(orderCap));
  if (3 % *ord != 0) return std::nullopt;
  unsigned l = std::lcm(a.conductor(), 3u);
  CycMatrix al = a.embedded(l);
  int m = a.rows();
  int mult[3];
  for (int j = 0; j < 3; ++j) {
    CycMatrix b = al;
    CycNum lambda = CycNum::zeta(l, static_cast<long long>(j) * (l / 3));
    for (int i = 0; i < m; ++i) b(i, i) -= lambda;
    mult[j] = m - rank(b);
  }
  for (int base = 0; base < 3; ++base) {
    int up = (base + 1) % 3;
    int other = (base + 2) % 3;
    if (mult[other] != 0) continue;
    if ((mult[up] == 2 || mult[up] == 3) && mult[base] == m - mult[up]) return std::make_pair(mult[up], mult[base]);
  }
  return std::nullopt;
}

bool isSpecial(const MatGroup& g) {
  if (g.dim() != 7) throw InputError("special representations are defined in dimension 7");
  bool special = true;
  g.forEach([&](const CycMatrix& a) {
    if (special && cubeRootEigenShape(a)) special = false;
  });
  return special;
}

}  // namespace cubicsym
